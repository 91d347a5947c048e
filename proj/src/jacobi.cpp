#include "spinparity/jacobi.hpp"

#include <utility>

#include "spinparity/floorcount.hpp"
#include "spinparity/intmath.hpp"

namespace spinparity {

OddModulus::OddModulus(std::int64_t k) : k_(k), m_((k - 1) / 2) {
  if (k <= 0 || k % 2 == 0) {
    throw InvalidArgument("modulus must be an odd positive integer, got " +
                          std::to_string(k));
  }
}

JacobiValue JacobiValue::from_int(int v) {
  if (v < -1 || v > 1) {
    throw InvalidArgument("Jacobi value must be -1, 0 or 1, got " +
                          std::to_string(v));
  }
  return JacobiValue{v};
}

JacobiValue jacobi(std::int64_t a, OddModulus k) {
  auto n = static_cast<std::uint64_t>(k.k());
  auto x = static_cast<std::uint64_t>(floor_mod(a, k.k()));
  int sign = 1;
  while (x != 0) {
    // Pull out factors of two: (2/n) = -1 iff n = 3, 5 (mod 8).
    while ((x & 1u) == 0) {
      x >>= 1;
      const auto r = n & 7u;
      if (r == 3 || r == 5) sign = -sign;
    }
    // Reciprocity: flip when both are 3 mod 4.
    std::swap(x, n);
    if ((x & 3u) == 3 && (n & 3u) == 3) sign = -sign;
    x %= n;
  }
  return n == 1 ? JacobiValue::from_int(sign) : JacobiValue::zero();
}

JacobiValue jacobi_two(OddModulus k) {
  switch (k.k() % 8) {
    case 1:
    case 7:
      return JacobiValue::plus_one();
    default:
      return JacobiValue::minus_one();
  }
}

JacobiValue eisenstein_sign(std::int64_t a, OddModulus k) {
  if (a < 1 || a % 2 == 0) {
    throw PreconditionError("eisenstein_sign: numerator must be odd and "
                            "positive, got " + std::to_string(a));
  }
  if (gcd(a, k.k()) != 1) {
    throw PreconditionError("eisenstein_sign: gcd(" + std::to_string(a) +
                            ", " + std::to_string(k.k()) + ") > 1");
  }
  return JacobiValue::from_parity(s_k(a, k));
}

std::int64_t gauss_schering_count(std::int64_t a, OddModulus k) {
  if (a < 1) {
    throw PreconditionError("gauss_schering_count: numerator must be "
                            "positive, got " + std::to_string(a));
  }
  if (gcd(a, k.k()) != 1) {
    throw PreconditionError("gauss_schering_count: gcd(" + std::to_string(a) +
                            ", " + std::to_string(k.k()) + ") > 1");
  }
  const std::int64_t step = a % k.k();
  std::int64_t residue = 0;
  std::int64_t count = 0;
  for (std::int64_t j = 1; j <= k.m(); ++j) {
    residue += step;
    if (residue >= k.k()) residue -= k.k();
    if (residue > k.m()) ++count;
  }
  return count;
}

}  // namespace spinparity
