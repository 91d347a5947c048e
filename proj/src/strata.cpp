#include "spinparity/strata.hpp"

#include <string>

namespace spinparity {

Signature::Signature(OddModulus k, std::vector<std::int64_t> entries,
                     int genus, std::optional<std::int64_t> rotation)
    : k_(k), entries_(std::move(entries)), genus_(genus), rotation_(rotation) {
  if (genus_ != 0 && genus_ != 1) {
    throw ValidationError("genus must be 0 or 1, got " +
                          std::to_string(genus_));
  }
  if (entries_.empty()) {
    throw ValidationError("signature must have at least one entry");
  }
  if (genus_ == 1 && !rotation_) {
    throw ValidationError("genus 1 requires a rotation number");
  }
  if (genus_ == 0 && rotation_) {
    throw ValidationError("rotation number is only defined in genus 1");
  }
  std::int64_t sum = 0;
  for (const std::int64_t e : entries_) {
    if (__builtin_add_overflow(sum, e, &sum)) {
      throw ValidationError("sum of entries overflows signed 64-bit range");
    }
  }
  const std::int64_t expected = required_sum();
  if (sum != expected) {
    throw ValidationError("sum rule violated: entries sum to " +
                          std::to_string(sum) + ", expected " +
                          std::to_string(expected) + " = k(2g-2) for k=" +
                          std::to_string(k_.k()) + ", g=" +
                          std::to_string(genus_));
  }
}

std::int64_t Signature::required_sum() const {
  return checked_mul(k_.k(), 2 * genus_ - 2, "signature sum rule");
}

std::vector<std::int64_t> Signature::doubled() const {
  std::vector<std::int64_t> out;
  out.reserve(entries_.size());
  for (const std::int64_t e : entries_) {
    out.push_back(checked_mul(e, 2, "doubled signature"));
  }
  return out;
}

PrimePartition partition_primes(OddModulus k) {
  PrimePartition out;
  for (const PrimePower& pp : factorize(k.k())) {
    if (jacobi_two(OddModulus{pp.prime}) == JacobiValue::plus_one()) {
      out.p_primes.push_back(pp);
    } else {
      out.q_primes.push_back(pp);
      out.nu_Q_of_k += pp.exponent;
    }
  }
  return out;
}

unsigned nu_Q(std::int64_t m, const PrimePartition& partition) {
  unsigned total = 0;
  for (const PrimePower& q : partition.q_primes) {
    total += valuation(q.prime, m).capped(q.exponent);
  }
  return total;
}

std::int64_t n_k_valuation(const Signature& sig) {
  const PrimePartition partition = partition_primes(sig.k());
  const unsigned reference = partition.nu_Q_of_k % 2;
  std::int64_t count = 0;
  for (const std::int64_t e : sig.entries()) {
    if (nu_Q(e, partition) % 2 != reference) ++count;
  }
  return count;
}

std::int64_t n_k_jacobi(const Signature& sig) {
  const JacobiValue reference = jacobi_two(sig.k());
  std::int64_t count = 0;
  for (const std::int64_t e : sig.entries()) {
    const OddModulus d{gcd(sig.k().k(), e)};
    if (jacobi_two(d) != reference) ++count;
  }
  return count;
}

int spin_parity_class(const Signature& sig) {
  const std::int64_t n = n_k_jacobi(sig);
  if (sig.genus() == 0) return static_cast<int>(n % 2);
  const std::int64_t d = floor_mod(*sig.rotation(), 2);
  return static_cast<int>((n + d + 1) % 2);
}

}  // namespace spinparity
