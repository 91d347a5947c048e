#include "spinparity/intmath.hpp"

#include <limits>
#include <numeric>

namespace spinparity {

namespace {

std::uint64_t magnitude(std::int64_t x) {
  return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x)
               : static_cast<std::uint64_t>(x);
}

}  // namespace

unsigned Valuation::value() const {
  if (infinite_) {
    throw InvalidArgument("valuation is INFINITE and has no finite value");
  }
  return value_;
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("INFINITE") : std::to_string(value_);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  if (b == 0) {
    throw DivisionByZero("floor_div: division by zero");
  }
  if (b == -1 && a == std::numeric_limits<std::int64_t>::min()) {
    throw CapacityError("floor_div: quotient exceeds signed 64-bit range");
  }
  std::int64_t q = a / b;
  // C++ division truncates; step down when the remainder has the wrong sign.
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  if (b <= 0) {
    throw InvalidArgument("floor_mod: modulus must be positive");
  }
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t g = std::gcd(magnitude(a), magnitude(b));
  if (g > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw CapacityError("gcd: result 2^63 exceeds signed 64-bit range");
  }
  return static_cast<std::int64_t>(g);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Valuation valuation(std::int64_t q, std::int64_t m) {
  if (!is_prime(q)) {
    throw InvalidArgument("valuation: base " + std::to_string(q) +
                          " is not a prime");
  }
  if (m == 0) return Valuation::infinite();
  std::uint64_t x = magnitude(m);
  const auto uq = static_cast<std::uint64_t>(q);
  unsigned v = 0;
  while (x % uq == 0) {
    x /= uq;
    ++v;
  }
  return Valuation::finite(v);
}

Factorization factorize(std::int64_t k) {
  if (k <= 0) {
    throw InvalidArgument("factorize: argument must be positive, got " +
                          std::to_string(k));
  }
  if (k > kFactorizationBound) {
    throw CapacityError("factorize: argument " + std::to_string(k) +
                        " exceeds the factorization bound 2^48");
  }
  Factorization out;
  auto strip = [&](std::int64_t p) {
    unsigned e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  };
  strip(2);
  for (std::int64_t p = 3; p <= k / p; p += 2) {
    strip(p);
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw CapacityError(std::string(what) + ": sum exceeds signed 64-bit range");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw CapacityError(std::string(what) +
                        ": product exceeds signed 64-bit range");
  }
  return r;
}

}  // namespace spinparity
