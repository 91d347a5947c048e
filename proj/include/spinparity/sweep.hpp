#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "spinparity/floorcount.hpp"

namespace spinparity {

/// n in [1, k - 1] with gcd(n, k) = gcd(n + 1, k) = 1.
struct CoprimePairs {
  bool operator==(const CoprimePairs&) const = default;
};

/// n in [0, n_max], no coprimality filter.
struct AllN {
  std::int64_t n_max = 0;
  bool operator==(const AllN&) const = default;
};

using NPolicy = std::variant<CoprimePairs, AllN>;

struct SweepConfig {
  std::int64_t k_min = 3;
  std::int64_t k_max = 3;
  NPolicy n_policy = CoprimePairs{};
  PairCountMethod method = PairCountMethod::kFloorIdentity;
  int workers = 1;

  /// Throws InvalidArgument on even or nonpositive bounds, k_min > k_max,
  /// negative n_max or workers < 1.
  void validate() const;
};

struct Counterexample {
  std::string check;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t observed = 0;
  std::int64_t expected = 0;

  bool operator==(const Counterexample&) const = default;
};

enum class Verdict { kPass, kFail };

struct SweepReport {
  std::string check;  // "conjecture", "identity" or "laws"
  SweepConfig config;
  std::int64_t checks_run = 0;
  std::vector<Counterexample> counterexamples;  // ascending k, then n
  std::int64_t elapsed_ms = 0;

  Verdict verdict() const {
    return counterexamples.empty() ? Verdict::kPass : Verdict::kFail;
  }
};

std::string_view to_string(Verdict verdict);

/// Checks N_k(n) mod 2 == target_parity(k) with cfg.method for every odd k
/// in range and every n allowed by CoprimePairs. N_k(n) is k-periodic in n,
/// so n in [1, k - 1] is exhaustive.
SweepReport sweep_conjecture(const SweepConfig& cfg);

/// Checks n_count(n, k, cfg.method) == F_k(n + 1) - F_k(n) for every odd k
/// in range and every n in [0, n_max]. cfg.method is the definitional side
/// and must be BRUTE_PAIRS or LINEAR_SCAN; the policy must be AllN.
SweepReport sweep_identity(const SweepConfig& cfg);

/// For every odd k in [3, k_max]: Eisenstein's sign against jacobi() over
/// odd coprime a in [1, 2k]; the Gauss-Schering count against jacobi() over
/// coprime a in [1, k - 1]; jacobi_two() against jacobi(2, k) and against
/// (-1)^((k^2 - 1) / 8).
SweepReport sweep_laws(std::int64_t k_max, int workers = 1);

/// Worker count from SPINPARITY_JOBS, or the hardware concurrency when the
/// variable is unset. Throws InvalidArgument when it is set but is not a
/// positive integer.
int workers_from_environment();

}  // namespace spinparity
