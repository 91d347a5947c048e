// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library: floors go through 128-bit residues, Jacobi symbols
// through tables of squares, pair counts through full enumeration.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using i128 = __int128;

inline std::int64_t floor_of(i128 num, i128 den) {
  i128 r = num % den;
  if (r < 0) r += (den < 0 ? -den : den);
  return static_cast<std::int64_t>((num - r) / den);
}

inline std::int64_t floor_sum(std::int64_t count, std::int64_t modulus,
                              std::int64_t slope, std::int64_t offset) {
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < count; ++i) {
    total += floor_of(static_cast<i128>(slope) * i + offset, modulus);
  }
  return total;
}

inline std::int64_t s_k(std::int64_t a, std::int64_t k) {
  const std::int64_t m = (k - 1) / 2;
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    total += floor_of(static_cast<i128>(a) * i, k);
  }
  return total;
}

inline std::int64_t f_k(std::int64_t a, std::int64_t k) {
  const std::int64_t m = (k - 1) / 2;
  std::int64_t total = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    total += floor_of(static_cast<i128>(a) * i + m, k);
  }
  return total;
}

/// Literal definition: all (b1, b2) in [1, m]^2, b1 + b2 >= m + 1,
/// k | b2 - n b1.
inline std::int64_t pair_count(std::int64_t n, std::int64_t k) {
  const std::int64_t m = (k - 1) / 2;
  std::int64_t count = 0;
  for (std::int64_t b1 = 1; b1 <= m; ++b1) {
    for (std::int64_t b2 = 1; b2 <= m; ++b2) {
      if (b1 + b2 < m + 1) continue;
      if ((static_cast<i128>(b2) - static_cast<i128>(n) * b1) % k == 0) {
        ++count;
      }
    }
  }
  return count;
}

inline std::map<std::int64_t, int> factor(std::int64_t n) {
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

/// Legendre symbol from the table of nonzero squares mod p.
inline int legendre(std::int64_t a, std::int64_t p) {
  const std::int64_t r = ((a % p) + p) % p;
  if (r == 0) return 0;
  std::set<std::int64_t> squares;
  for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
  return squares.count(r) ? 1 : -1;
}

/// Jacobi symbol as the product of Legendre symbols over k's factorization.
inline int jacobi(std::int64_t a, std::int64_t k) {
  int result = 1;
  for (const auto& [p, e] : factor(k)) {
    const int l = legendre(a, p);
    for (int i = 0; i < e; ++i) result *= l;
  }
  return result;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  std::int64_t best = 0;
  const std::int64_t hi = a > b ? a : b;
  for (std::int64_t d = 1; d <= hi; ++d) {
    if (a % d == 0 && b % d == 0) best = d;
  }
  return best;
}

/// n_k(mu) straight from the valuation definition: Q-primes are the primes
/// q | k with floor((q + 1) / 4) odd, and nu_Q(m) caps each nu_q(m) at
/// nu_q(k) (nu_q(0) counts as infinite).
inline std::int64_t n_k(const std::vector<std::int64_t>& mu, std::int64_t k) {
  auto nu_q_capped = [](std::int64_t m, std::int64_t q, int cap) {
    if (m == 0) return cap;
    int v = 0;
    while (v < cap && m % q == 0) {
      m /= q;
      ++v;
    }
    return v;
  };
  const auto fk = factor(k);
  auto nu_Q = [&](std::int64_t m) {
    int total = 0;
    for (const auto& [q, e] : fk) {
      if (((q + 1) / 4) % 2 == 1) total += nu_q_capped(m, q, e);
    }
    return total;
  };
  const int ref = nu_Q(k) % 2;
  std::int64_t count = 0;
  for (const std::int64_t m : mu) {
    if (nu_Q(m) % 2 != ref) ++count;
  }
  return count;
}

}  // namespace oracle
