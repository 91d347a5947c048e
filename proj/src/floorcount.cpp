#include "spinparity/floorcount.hpp"

#include <limits>
#include <string>
#include <utility>

#include "spinparity/intmath.hpp"

namespace spinparity {

namespace {

using u64 = std::uint64_t;
__extension__ using i128 = __int128;

void require_floor_sum_bound(std::int64_t v, const char* name) {
  if (v > kFloorSumBound || v < -kFloorSumBound) {
    throw CapacityError(std::string("floor_sum: |") + name + "| = " +
                        std::to_string(v) + " exceeds the bound 2^31");
  }
}

// Nonnegative case: 0 <= slope, offset and all magnitudes <= 2^31, so
// slope * count + offset < 2^63 and every partial sum is bounded by the
// final answer (< 2^93).
i128 floor_sum_nonnegative(u64 count, u64 modulus, u64 slope, u64 offset) {
  i128 total = 0;
  while (true) {
    if (slope >= modulus) {
      total += static_cast<i128>(count) * (count - 1) / 2 * (slope / modulus);
      slope %= modulus;
    }
    if (offset >= modulus) {
      total += static_cast<i128>(count) * (offset / modulus);
      offset %= modulus;
    }
    // Lattice points under the line y = (slope x + offset) / modulus,
    // counted by transposing the rectangle.
    const u64 y_max = slope * count + offset;
    if (y_max < modulus) break;
    count = y_max / modulus;
    offset = y_max % modulus;
    std::swap(modulus, slope);
  }
  return total;
}

}  // namespace

std::string_view to_string(PairCountMethod method) {
  switch (method) {
    case PairCountMethod::kBrutePairs:
      return "brute";
    case PairCountMethod::kLinearScan:
      return "linear";
    case PairCountMethod::kFloorIdentity:
      return "identity";
  }
  return "unknown";
}

std::optional<PairCountMethod> parse_pair_count_method(std::string_view text) {
  if (text == "brute" || text == "BRUTE_PAIRS") {
    return PairCountMethod::kBrutePairs;
  }
  if (text == "linear" || text == "LINEAR_SCAN") {
    return PairCountMethod::kLinearScan;
  }
  if (text == "identity" || text == "FLOOR_IDENTITY") {
    return PairCountMethod::kFloorIdentity;
  }
  return std::nullopt;
}

std::int64_t floor_sum(std::int64_t count, std::int64_t modulus,
                       std::int64_t slope, std::int64_t offset) {
  if (count < 0) {
    throw InvalidArgument("floor_sum: count must be nonnegative, got " +
                          std::to_string(count));
  }
  if (modulus < 1) {
    throw InvalidArgument("floor_sum: modulus must be positive, got " +
                          std::to_string(modulus));
  }
  require_floor_sum_bound(count, "count");
  require_floor_sum_bound(modulus, "modulus");
  require_floor_sum_bound(slope, "slope");
  require_floor_sum_bound(offset, "offset");

  i128 total = 0;
  const i128 pairs = static_cast<i128>(count) * (count - 1) / 2;
  // slope = slope' - c modulus with 0 <= slope' < modulus contributes
  // -c * sum(i) = -c * count (count - 1) / 2.
  if (slope < 0) {
    const std::int64_t reduced = floor_mod(slope, modulus);
    total -= pairs * ((reduced - slope) / modulus);
    slope = reduced;
  }
  if (offset < 0) {
    const std::int64_t reduced = floor_mod(offset, modulus);
    total -= static_cast<i128>(count) * ((reduced - offset) / modulus);
    offset = reduced;
  }
  total += floor_sum_nonnegative(static_cast<u64>(count),
                                 static_cast<u64>(modulus),
                                 static_cast<u64>(slope),
                                 static_cast<u64>(offset));
  if (total > std::numeric_limits<std::int64_t>::max() ||
      total < std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError("floor_sum: result exceeds signed 64-bit range");
  }
  return static_cast<std::int64_t>(total);
}

std::int64_t s_k(std::int64_t a, OddModulus k) {
  if (k.m() == 0) return 0;
  return floor_sum(k.m() + 1, k.k(), a, 0);
}

std::int64_t f_k_naive(std::int64_t a, OddModulus k) {
  const std::int64_t m = k.m();
  if (a == std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError("f_k_naive: |a| exceeds signed 64-bit range");
  }
  const std::int64_t abs_a = a < 0 ? -a : a;
  // Every term a i + m is bounded by |a| m + m.
  checked_add(checked_mul(abs_a, m, "f_k_naive |a| m"), m, "f_k_naive |a| m + m");
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    total = checked_add(total, floor_div(a * i + m, k.k()), "f_k_naive sum");
  }
  return total;
}

std::int64_t f_k(std::int64_t a, OddModulus k) {
  if (k.m() == 0) return 0;
  return floor_sum(k.m() + 1, k.k(), a, k.m());
}

int target_parity(OddModulus k) {
  const auto r = k.k() % 8;
  return (r == 3 || r == 5) ? 1 : 0;
}

std::int64_t n_count(std::int64_t n, OddModulus k, PairCountMethod method) {
  const std::int64_t m = k.m();
  switch (method) {
    case PairCountMethod::kBrutePairs: {
      if (n < 0) {
        throw PreconditionError("n_count(brute): n must be nonnegative, got " +
                                std::to_string(n));
      }
      if (k.k() > kBrutePairsMaxK) {
        throw CapacityError("n_count(brute): k = " + std::to_string(k.k()) +
                            " exceeds the brute-force bound 100000");
      }
      // b2 < k, so b2 = n b1 (mod k) is equality with the residue of n b1.
      const std::int64_t step = n % k.k();
      std::int64_t residue = 0;
      std::int64_t count = 0;
      for (std::int64_t b1 = 1; b1 <= m; ++b1) {
        residue += step;
        if (residue >= k.k()) residue -= k.k();
        for (std::int64_t b2 = 1; b2 <= m; ++b2) {
          count += static_cast<std::int64_t>((b1 + b2 >= m + 1) &
                                             (b2 == residue));
        }
      }
      return count;
    }
    case PairCountMethod::kLinearScan: {
      if (n < 0) {
        throw PreconditionError("n_count(linear): n must be nonnegative, got " +
                                std::to_string(n));
      }
      const std::int64_t step = n % k.k();
      std::int64_t residue = 0;
      std::int64_t count = 0;
      for (std::int64_t b1 = 1; b1 <= m; ++b1) {
        residue += step;
        if (residue >= k.k()) residue -= k.k();
        // The unique b2 in [1, m] is the residue itself, if it lies there.
        if (residue <= m && residue >= m + 1 - b1) ++count;
      }
      return count;
    }
    case PairCountMethod::kFloorIdentity:
      return f_k(checked_add(n, 1, "n_count n + 1"), k) - f_k(n, k);
  }
  throw InvalidArgument("n_count: unknown method");
}

}  // namespace spinparity
