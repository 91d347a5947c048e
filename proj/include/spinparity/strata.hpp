#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spinparity/intmath.hpp"
#include "spinparity/jacobi.hpp"

namespace spinparity {

/// Signature mu = (m_1, ..., m_n) of the stratum of k-differentials with
/// orders 2 mu, for odd k in genus 0 or 1.
///
/// Invariants enforced at construction:
///   - entries nonempty;
///   - genus is 0 or 1;
///   - sum(entries) == k (2 genus - 2), i.e. -2k in genus 0, 0 in genus 1;
///   - a rotation number is present iff genus == 1.
/// The rotation number itself is not range-checked.
class Signature {
 public:
  /// Throws ValidationError naming the violated invariant.
  Signature(OddModulus k, std::vector<std::int64_t> entries, int genus,
            std::optional<std::int64_t> rotation = std::nullopt);

  OddModulus k() const { return k_; }
  std::span<const std::int64_t> entries() const { return entries_; }
  int genus() const { return genus_; }
  std::optional<std::int64_t> rotation() const { return rotation_; }

  /// k (2 genus - 2).
  std::int64_t required_sum() const;

  /// The tuple 2 mu of actual zero and pole orders.
  std::vector<std::int64_t> doubled() const;

 private:
  OddModulus k_;
  std::vector<std::int64_t> entries_;
  int genus_;
  std::optional<std::int64_t> rotation_;
};

/// Factorization of k split by (2/p): P-primes have (2/p) = +1
/// (p = 1, 7 mod 8), Q-primes have (2/p) = -1 (p = 3, 5 mod 8).
struct PrimePartition {
  Factorization p_primes;
  Factorization q_primes;
  unsigned nu_Q_of_k = 0;  // sum of exponents over q_primes
};

/// Throws CapacityError when k exceeds kFactorizationBound.
PrimePartition partition_primes(OddModulus k);

/// nu_Q(m) = sum over Q-primes q of min(nu_q(m), nu_q(k)); m = 0 saturates
/// every term at nu_q(k).
unsigned nu_Q(std::int64_t m, const PrimePartition& partition);

/// #{i : nu_Q(m_i) and nu_Q(k) differ in parity}. Factorizes k.
std::int64_t n_k_valuation(const Signature& sig);

/// #{i : (2 / gcd(k, |m_i|)) != (2/k)}. No factorization; m_i = 0 gives
/// gcd = k and never counts.
std::int64_t n_k_jacobi(const Signature& sig);

/// Residue class that labels the spin component: n_k mod 2 in genus 0,
/// (n_k + d + 1) mod 2 in genus 1. Which residue is "even spin" is not
/// asserted.
int spin_parity_class(const Signature& sig);

}  // namespace spinparity
