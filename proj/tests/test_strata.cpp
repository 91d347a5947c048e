#include <cstdint>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "spinparity/strata.hpp"
#include "strata_gen.hpp"

namespace sp = spinparity;
using sp::OddModulus;
using sp::Signature;

TEST(Signature, Validation) {
  EXPECT_NO_THROW(Signature(OddModulus{15}, {6, 2, -38}, 0));
  EXPECT_NO_THROW(Signature(OddModulus{3}, {1, -1}, 1, 0));
  EXPECT_THROW(Signature(OddModulus{3}, {1, 1}, 0), sp::ValidationError);
  EXPECT_THROW(Signature(OddModulus{3}, {1, -1}, 1), sp::ValidationError);
  EXPECT_THROW(Signature(OddModulus{3}, {1, -7}, 0, 2), sp::ValidationError);
  EXPECT_THROW(Signature(OddModulus{3}, {}, 1, 0), sp::ValidationError);
  EXPECT_THROW(Signature(OddModulus{3}, {0}, 2, 0), sp::ValidationError);
}

TEST(Signature, SumRuleMessageNamesBothSums) {
  try {
    Signature(OddModulus{3}, {1, 1}, 0);
    FAIL();
  } catch (const sp::ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("sum to 2"), std::string::npos) << msg;
    EXPECT_NE(msg.find("expected -6"), std::string::npos) << msg;
  }
}

TEST(Signature, Doubled) {
  const Signature sig(OddModulus{15}, {6, 2, -38}, 0);
  EXPECT_EQ(sig.doubled(), (std::vector<std::int64_t>{12, 4, -76}));
  EXPECT_EQ(sig.required_sum(), -30);
}

TEST(PartitionPrimes, Examples) {
  using F = sp::Factorization;
  const auto p15 = sp::partition_primes(OddModulus{15});
  EXPECT_EQ(p15.p_primes, F{});
  EXPECT_EQ(p15.q_primes, (F{{3, 1}, {5, 1}}));
  EXPECT_EQ(p15.nu_Q_of_k, 2u);

  const auto p7 = sp::partition_primes(OddModulus{7});
  EXPECT_EQ(p7.p_primes, (F{{7, 1}}));
  EXPECT_EQ(p7.q_primes, F{});
  EXPECT_EQ(p7.nu_Q_of_k, 0u);

  const auto p1 = sp::partition_primes(OddModulus{1});
  EXPECT_TRUE(p1.p_primes.empty());
  EXPECT_TRUE(p1.q_primes.empty());
  EXPECT_EQ(p1.nu_Q_of_k, 0u);

  const auto p = sp::partition_primes(OddModulus{3 * 3 * 3 * 7 * 11 * 17});
  EXPECT_EQ(p.p_primes, (F{{7, 1}, {17, 1}}));
  EXPECT_EQ(p.q_primes, (F{{3, 3}, {11, 1}}));
  EXPECT_EQ(p.nu_Q_of_k, 4u);
}

TEST(PartitionPrimes, SoundUpTo1e4) {
  for (std::int64_t k = 1; k <= 10'000; k += 2) {
    const auto part = sp::partition_primes(OddModulus{k});
    std::int64_t product = 1;
    for (const auto& [p, e] : part.p_primes) {
      ASSERT_EQ(sp::jacobi_two(OddModulus{p}), sp::JacobiValue::plus_one());
      ASSERT_EQ(((p + 1) / 4) % 2, 0);
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    for (const auto& [q, e] : part.q_primes) {
      ASSERT_EQ(sp::jacobi_two(OddModulus{q}), sp::JacobiValue::minus_one());
      ASSERT_EQ(((q + 1) / 4) % 2, 1);
      for (unsigned i = 0; i < e; ++i) product *= q;
    }
    ASSERT_EQ(product, k);
  }
}

TEST(NuQ, Examples) {
  const auto p15 = sp::partition_primes(OddModulus{15});
  EXPECT_EQ(sp::nu_Q(6, p15), 1u);
  EXPECT_EQ(sp::nu_Q(2, p15), 0u);
  EXPECT_EQ(sp::nu_Q(0, p15), 2u);
  // Capped at nu_3(k) = 1.
  EXPECT_EQ(sp::nu_Q(27, p15), 1u);
}

TEST(NK, Examples) {
  const Signature a(OddModulus{15}, {6, 2, -38}, 0);
  EXPECT_EQ(sp::n_k_valuation(a), 1);
  EXPECT_EQ(sp::n_k_jacobi(a), 1);

  const Signature b(OddModulus{3}, {1, -7}, 0);
  EXPECT_EQ(sp::n_k_valuation(b), 2);
  EXPECT_EQ(sp::n_k_jacobi(b), 2);

  const Signature c(OddModulus{7}, {4, -18}, 0);
  EXPECT_EQ(sp::n_k_valuation(c), 0);
  EXPECT_EQ(sp::n_k_jacobi(c), 0);

  const Signature d(OddModulus{9}, {-9, -9}, 0);
  EXPECT_EQ(sp::n_k_jacobi(d), 0);
  EXPECT_EQ(sp::n_k_valuation(d), 0);
}

TEST(NK, EquivalenceRandomized) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const Signature sig = testgen::random_signature(rng, 100'000, 1'000'000);
    ASSERT_EQ(sp::n_k_valuation(sig), sp::n_k_jacobi(sig))
        << "k=" << sig.k().k();
  }
}

TEST(NK, EquivalenceExhaustiveSmall) {
  for (std::int64_t k = 1; k <= 45; k += 2) {
    for (std::int64_t m = -100; m <= 100; ++m) {
      for (int genus : {0, 1}) {
        const Signature sig = testgen::embed_entry(OddModulus{k}, m, genus);
        ASSERT_EQ(sp::n_k_valuation(sig), sp::n_k_jacobi(sig))
            << "k=" << k << " m=" << m;
      }
    }
  }
}

TEST(SpinParity, Examples) {
  EXPECT_EQ(sp::spin_parity_class(Signature(OddModulus{15}, {6, 2, -38}, 0)),
            1);
  EXPECT_EQ(sp::spin_parity_class(Signature(OddModulus{3}, {1, -1}, 1, 0)), 1);
  EXPECT_EQ(sp::spin_parity_class(Signature(OddModulus{3}, {1, -1}, 1, 1)), 0);
  EXPECT_EQ(sp::spin_parity_class(Signature(OddModulus{3}, {1, -1}, 1, -1)),
            0);
}

TEST(SpinParity, RotationDependence) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d_dist(-1000, 1000);
  for (int t = 0; t < 500; ++t) {
    const Signature base = testgen::random_signature(rng, 999, 1000, 1);
    const std::vector<std::int64_t> mu(base.entries().begin(),
                                       base.entries().end());
    const std::int64_t d = d_dist(rng);
    const int c0 = sp::spin_parity_class(Signature(base.k(), mu, 1, d));
    const int c1 = sp::spin_parity_class(Signature(base.k(), mu, 1, d + 1));
    const int c2 = sp::spin_parity_class(Signature(base.k(), mu, 1, d + 2));
    ASSERT_NE(c0, c1);
    ASSERT_EQ(c0, c2);
  }
}

TEST(SpinParity, ZeroEntriesAreNeutral) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const Signature base = testgen::random_signature(rng, 9999, 10'000, 1);
    std::vector<std::int64_t> mu(base.entries().begin(), base.entries().end());
    mu.push_back(0);
    mu.push_back(0);
    const Signature padded(base.k(), mu, 1, base.rotation());
    ASSERT_EQ(sp::n_k_jacobi(padded), sp::n_k_jacobi(base));
    ASSERT_EQ(sp::n_k_valuation(padded), sp::n_k_valuation(base));
  }
}
