#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "spinparity/errors.hpp"

namespace spinparity {

/// A validated odd positive modulus k with m = (k - 1) / 2 cached.
/// k = 1 is admitted; every sum over i = 1..m is then empty.
class OddModulus {
 public:
  /// Throws InvalidArgument for even or nonpositive k.
  explicit OddModulus(std::int64_t k);

  constexpr std::int64_t k() const { return k_; }
  constexpr std::int64_t m() const { return m_; }

  constexpr bool operator==(const OddModulus&) const = default;

 private:
  std::int64_t k_;
  std::int64_t m_;
};

/// A Jacobi symbol value in {-1, 0, +1}.
class JacobiValue {
 public:
  static constexpr JacobiValue minus_one() { return JacobiValue{-1}; }
  static constexpr JacobiValue zero() { return JacobiValue{0}; }
  static constexpr JacobiValue plus_one() { return JacobiValue{1}; }

  /// (-1)^exponent for a nonnegative exponent.
  static constexpr JacobiValue from_parity(std::int64_t exponent) {
    return JacobiValue{(exponent % 2 == 0) ? 1 : -1};
  }

  /// Throws InvalidArgument unless v is -1, 0 or 1.
  static JacobiValue from_int(int v);

  constexpr int value() const { return value_; }

  constexpr JacobiValue operator*(JacobiValue other) const {
    return JacobiValue{value_ * other.value_};
  }
  constexpr bool operator==(const JacobiValue&) const = default;

  std::string to_string() const { return std::to_string(value_); }

 private:
  constexpr explicit JacobiValue(int v) : value_(v) {}

  int value_;
};

/// Jacobi symbol (a/k) by the binary reciprocity algorithm. Negative a is
/// reduced modulo k first; (a/1) = +1.
JacobiValue jacobi(std::int64_t a, OddModulus k);

/// (2/k) read off k mod 8: +1 for k = +-1, -1 for k = +-3.
JacobiValue jacobi_two(OddModulus k);

/// (-1)^{S_k(a)} with S_k(a) = sum_{i=1}^{m} floor(a i / k).
/// Requires a odd, a >= 1, gcd(a, k) = 1; otherwise PreconditionError.
JacobiValue eisenstein_sign(std::int64_t a, OddModulus k);

/// Number of j in 1..m whose least nonnegative residue a j mod k exceeds m.
/// Requires a >= 1 and gcd(a, k) = 1; otherwise PreconditionError.
std::int64_t gauss_schering_count(std::int64_t a, OddModulus k);

}  // namespace spinparity
