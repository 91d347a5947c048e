#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spinparity/errors.hpp"

namespace spinparity {

/// Largest integer accepted by factorize(). Trial division up to sqrt(2^48)
/// is about 8.4 million odd candidates in the worst case.
inline constexpr std::int64_t kFactorizationBound = std::int64_t{1} << 48;

/// q-adic valuation. The valuation of 0 is the distinguished INFINITE value,
/// which behaves as +infinity under min().
class Valuation {
 public:
  static constexpr Valuation infinite() { return Valuation{true, 0}; }
  static constexpr Valuation finite(unsigned v) { return Valuation{false, v}; }

  constexpr bool is_infinite() const { return infinite_; }

  /// Throws InvalidArgument when called on INFINITE.
  unsigned value() const;

  /// min(*this, cap); INFINITE yields cap.
  constexpr unsigned capped(unsigned cap) const {
    return infinite_ || value_ > cap ? cap : value_;
  }

  constexpr bool operator==(const Valuation&) const = default;

  std::string to_string() const;

 private:
  constexpr Valuation(bool inf, unsigned v) : infinite_(inf), value_(v) {}

  bool infinite_;
  unsigned value_;
};

struct PrimePower {
  std::int64_t prime;
  unsigned exponent;

  bool operator==(const PrimePower&) const = default;
};

/// Ascending by prime; empty for 1.
using Factorization = std::vector<PrimePower>;

/// Mathematical floor of a / b (rounds toward negative infinity).
/// Throws DivisionByZero for b == 0 and CapacityError for INT64_MIN / -1.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a modulo b > 0.
std::int64_t floor_mod(std::int64_t a, std::int64_t b);

/// gcd(|a|, |b|) with gcd(0, 0) = 0. Throws CapacityError when the result
/// (2^63) is not representable.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n);

/// nu_q(|m|). Throws InvalidArgument unless q is a prime.
Valuation valuation(std::int64_t q, std::int64_t m);

/// Trial division. Throws InvalidArgument for k <= 0 and CapacityError for
/// k > kFactorizationBound.
Factorization factorize(std::int64_t k);

// Overflow-checked arithmetic; `what` names the bound in the CapacityError.
std::int64_t checked_add(std::int64_t a, std::int64_t b, const char* what);
std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what);

}  // namespace spinparity
