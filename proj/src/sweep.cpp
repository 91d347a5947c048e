#include "spinparity/sweep.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <functional>
#include <string>
#include <thread>

#include "spinparity/intmath.hpp"

namespace spinparity {

namespace {

struct PerK {
  std::int64_t checks = 0;
  std::vector<Counterexample> counterexamples;
};

// Evaluates `body` for each odd k in [k_min, k_max] on up to `workers`
// threads, one k per task, and concatenates results in ascending k. The
// first failing k (in k order) has its exception rethrown.
SweepReport run_over_k(std::string check, const SweepConfig& cfg,
                       const std::function<PerK(OddModulus)>& body) {
  const auto started = std::chrono::steady_clock::now();
  const std::int64_t tasks = (cfg.k_max - cfg.k_min) / 2 + 1;
  std::vector<PerK> results(static_cast<std::size_t>(tasks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(tasks));
  std::atomic<std::int64_t> next{0};

  auto drain = [&] {
    for (std::int64_t i = next++; i < tasks; i = next++) {
      const auto slot = static_cast<std::size_t>(i);
      try {
        results[slot] = body(OddModulus{cfg.k_min + 2 * i});
      } catch (...) {
        errors[slot] = std::current_exception();
      }
    }
  };

  const auto threads = static_cast<std::int64_t>(cfg.workers) < tasks
                           ? static_cast<std::int64_t>(cfg.workers)
                           : tasks;
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (std::int64_t t = 0; t < threads; ++t) pool.emplace_back(drain);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SweepReport report;
  report.check = std::move(check);
  report.config = cfg;
  for (PerK& r : results) {
    report.checks_run += r.checks;
    for (Counterexample& c : r.counterexamples) {
      report.counterexamples.push_back(std::move(c));
    }
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

// Re-raises a capacity error with the offending (k, n) attached.
template <typename F>
auto at_point(std::int64_t k, std::int64_t n, F&& f) {
  try {
    return f();
  } catch (const CapacityError& e) {
    throw CapacityError("at k=" + std::to_string(k) + ", n=" +
                        std::to_string(n) + ": " + e.what());
  }
}

void require_odd(std::int64_t v, const char* name) {
  if (v < 1 || v % 2 == 0) {
    throw InvalidArgument(std::string(name) +
                          " must be an odd positive integer, got " +
                          std::to_string(v));
  }
}

}  // namespace

void SweepConfig::validate() const {
  require_odd(k_min, "k_min");
  require_odd(k_max, "k_max");
  if (k_min > k_max) {
    throw InvalidArgument("k_min (" + std::to_string(k_min) +
                          ") exceeds k_max (" + std::to_string(k_max) + ")");
  }
  if (const auto* all = std::get_if<AllN>(&n_policy); all && all->n_max < 0) {
    throw InvalidArgument("n_max must be nonnegative, got " +
                          std::to_string(all->n_max));
  }
  if (workers < 1) {
    throw InvalidArgument("workers must be positive, got " +
                          std::to_string(workers));
  }
}

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::kPass ? "PASS" : "FAIL";
}

SweepReport sweep_conjecture(const SweepConfig& cfg) {
  cfg.validate();
  if (!std::holds_alternative<CoprimePairs>(cfg.n_policy)) {
    throw InvalidArgument("conjecture sweep requires the COPRIME_PAIRS policy");
  }
  return run_over_k("conjecture", cfg, [&cfg](OddModulus k) {
    PerK out;
    const std::int64_t expected = target_parity(k);
    for (std::int64_t n = 1; n < k.k(); ++n) {
      if (gcd(n, k.k()) != 1 || gcd(n + 1, k.k()) != 1) continue;
      ++out.checks;
      const std::int64_t observed = floor_mod(
          at_point(k.k(), n, [&] { return n_count(n, k, cfg.method); }), 2);
      if (observed != expected) {
        out.counterexamples.push_back(
            {"conjecture", k.k(), n, observed, expected});
      }
    }
    return out;
  });
}

SweepReport sweep_identity(const SweepConfig& cfg) {
  cfg.validate();
  const auto* all = std::get_if<AllN>(&cfg.n_policy);
  if (all == nullptr) {
    throw InvalidArgument("identity sweep requires the ALL_N policy");
  }
  if (cfg.method == PairCountMethod::kFloorIdentity) {
    throw InvalidArgument(
        "identity sweep needs a definitional method (brute or linear)");
  }
  const std::int64_t n_max = all->n_max;
  return run_over_k("identity", cfg, [&cfg, n_max](OddModulus k) {
    PerK out;
    for (std::int64_t n = 0; n <= n_max; ++n) {
      ++out.checks;
      const std::int64_t observed =
          at_point(k.k(), n, [&] { return n_count(n, k, cfg.method); });
      const std::int64_t expected = at_point(
          k.k(), n, [&] { return f_k(n + 1, k) - f_k(n, k); });
      if (observed != expected) {
        out.counterexamples.push_back(
            {"identity", k.k(), n, observed, expected});
      }
    }
    return out;
  });
}

SweepReport sweep_laws(std::int64_t k_max, int workers) {
  SweepConfig cfg;
  cfg.k_min = 3;
  cfg.k_max = k_max;
  cfg.workers = workers;
  if (k_max < 3) {
    throw InvalidArgument("laws sweep requires k_max >= 3, got " +
                          std::to_string(k_max));
  }
  cfg.validate();
  return run_over_k("laws", cfg, [](OddModulus k) {
    PerK out;
    auto record = [&](const char* name, std::int64_t a, JacobiValue observed,
                      JacobiValue expected) {
      ++out.checks;
      if (observed != expected) {
        out.counterexamples.push_back(
            {name, k.k(), a, observed.value(), expected.value()});
      }
    };
    for (std::int64_t a = 1; a <= 2 * k.k(); a += 2) {
      if (gcd(a, k.k()) != 1) continue;
      record("eisenstein", a,
             at_point(k.k(), a, [&] { return eisenstein_sign(a, k); }),
             jacobi(a, k));
    }
    for (std::int64_t a = 1; a < k.k(); ++a) {
      if (gcd(a, k.k()) != 1) continue;
      const std::int64_t count = gauss_schering_count(a, k);
      record("gauss_schering", a, JacobiValue::from_parity(count),
             jacobi(a, k));
    }
    record("supplementary", 2, jacobi_two(k), jacobi(2, k));
    const std::int64_t k_sq_minus_1 =
        at_point(k.k(), 2, [&] { return checked_mul(k.k(), k.k(), "k^2") - 1; });
    record("supplementary_closed_form", 2, jacobi_two(k),
           JacobiValue::from_parity(k_sq_minus_1 / 8));
    return out;
  });
}

int workers_from_environment() {
  const char* raw = std::getenv("SPINPARITY_JOBS");
  if (raw == nullptr || *raw == '\0') {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  const std::string_view text(raw);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw InvalidArgument("SPINPARITY_JOBS must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace spinparity
