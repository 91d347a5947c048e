#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "spinparity/jacobi.hpp"

namespace spinparity {

/// Every argument of floor_sum (and hence of f_k / s_k) must have magnitude at
/// most this, so that the normalized reduction stays inside 64 bits.
inline constexpr std::int64_t kFloorSumBound = std::int64_t{1} << 31;

/// BRUTE_PAIRS is an O(m^2) oracle and refuses larger moduli.
inline constexpr std::int64_t kBrutePairsMaxK = 100'000;

enum class PairCountMethod {
  kBrutePairs,     // enumerate all (b1, b2) in [1, m]^2
  kLinearScan,     // one residue n b1 mod k per b1
  kFloorIdentity,  // F_k(n + 1) - F_k(n)
};

std::string_view to_string(PairCountMethod method);

/// Accepts "brute", "linear", "identity" (and the enum spellings
/// "BRUTE_PAIRS", "LINEAR_SCAN", "FLOOR_IDENTITY").
std::optional<PairCountMethod> parse_pair_count_method(std::string_view text);

/// sum_{i=0}^{count-1} floor((slope * i + offset) / modulus) in
/// O(log max(slope, modulus)) steps.
///
/// Negative slope or offset is shifted into [0, modulus) first and the
/// shift is subtracted back in closed form. Throws InvalidArgument when
/// count < 0 or modulus < 1, and CapacityError when an argument exceeds
/// kFloorSumBound in magnitude or the exact result does not fit in
/// int64_t.
std::int64_t floor_sum(std::int64_t count, std::int64_t modulus,
                       std::int64_t slope, std::int64_t offset);

/// S_k(a) = sum_{i=1}^{m} floor(a i / k), via floor_sum.
std::int64_t s_k(std::int64_t a, OddModulus k);

/// F_k(a) = sum_{i=1}^{m} floor((a i + m) / k), term by term.
/// Throws CapacityError when |a| m + m overflows int64_t.
std::int64_t f_k_naive(std::int64_t a, OddModulus k);

/// F_k(a) via floor_sum(m + 1, k, a, m); the i = 0 term floor(m / k) is 0.
/// Logarithmic in k. Requires |a| <= 2^31 and k <= 2^31.
std::int64_t f_k(std::int64_t a, OddModulus k);

/// floor((k + 1) / 4) mod 2, from k mod 8: 1 iff k = 3, 5 (mod 8).
int target_parity(OddModulus k);

/// N_k(n): pairs 1 <= b1, b2 <= m with b1 + b2 >= m + 1 and
/// b2 = n b1 (mod k). No coprimality condition on n is required.
///
/// BRUTE_PAIRS and LINEAR_SCAN need n >= 0 (PreconditionError otherwise);
/// BRUTE_PAIRS additionally needs k <= kBrutePairsMaxK (CapacityError).
/// FLOOR_IDENTITY is total on n within the floor_sum bound.
std::int64_t n_count(std::int64_t n, OddModulus k, PairCountMethod method);

}  // namespace spinparity
