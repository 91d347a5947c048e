#include "spinparity/report.hpp"

#include <sstream>

namespace spinparity {

namespace {

std::string join(const std::vector<std::int64_t>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string policy_name(const NPolicy& policy) {
  return std::holds_alternative<CoprimePairs>(policy) ? "COPRIME_PAIRS"
                                                      : "ALL_N";
}

bool is_laws(const SweepReport& report) { return report.check == "laws"; }

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "plain") return OutputFormat::kPlain;
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

nlohmann::ordered_json to_json(const SweepReport& report, bool with_timing) {
  nlohmann::ordered_json config;
  config["k_min"] = report.config.k_min;
  config["k_max"] = report.config.k_max;
  if (!is_laws(report)) {
    config["n_policy"] = policy_name(report.config.n_policy);
    if (const auto* all = std::get_if<AllN>(&report.config.n_policy)) {
      config["n_max"] = all->n_max;
    }
    config["method"] = std::string(to_string(report.config.method));
  }

  auto rows = nlohmann::ordered_json::array();
  for (const Counterexample& c : report.counterexamples) {
    rows.push_back({{"check", c.check},
                    {"k", c.k},
                    {"n", c.n},
                    {"observed", c.observed},
                    {"expected", c.expected}});
  }

  nlohmann::ordered_json doc;
  doc["check"] = report.check;
  doc["config"] = std::move(config);
  doc["checks_run"] = report.checks_run;
  doc["verdict"] = std::string(to_string(report.verdict()));
  doc["counterexamples"] = std::move(rows);
  if (with_timing) {
    doc["timing"] = {{"elapsed_ms", report.elapsed_ms},
                     {"workers", report.config.workers}};
  }
  return doc;
}

std::string render_plain(const SweepReport& report, bool with_timing) {
  std::ostringstream os;
  os << "check: " << report.check << '\n';
  os << "k_range: " << report.config.k_min << ".." << report.config.k_max
     << '\n';
  if (!is_laws(report)) {
    os << "n_policy: " << policy_name(report.config.n_policy);
    if (const auto* all = std::get_if<AllN>(&report.config.n_policy)) {
      os << " (n_max=" << all->n_max << ')';
    }
    os << '\n';
    os << "method: " << to_string(report.config.method) << '\n';
  }
  os << "checks_run: " << report.checks_run << '\n';
  os << "counterexamples: " << report.counterexamples.size() << '\n';
  for (const Counterexample& c : report.counterexamples) {
    os << "  " << c.check << " k=" << c.k << " n=" << c.n
       << " observed=" << c.observed << " expected=" << c.expected << '\n';
  }
  os << "verdict: " << to_string(report.verdict()) << '\n';
  if (with_timing) {
    os << "elapsed_ms: " << report.elapsed_ms
       << " (workers: " << report.config.workers << ")\n";
  }
  return os.str();
}

std::string render_csv(const SweepReport& report) {
  std::ostringstream os;
  os << kCounterexampleCsvHeader << '\n';
  for (const Counterexample& c : report.counterexamples) {
    os << c.check << ',' << c.k << ',' << c.n << ',' << c.observed << ','
       << c.expected << '\n';
  }
  return os.str();
}

SpinSummary summarize(const Signature& sig) {
  SpinSummary s;
  s.k = sig.k().k();
  s.genus = sig.genus();
  s.mu.assign(sig.entries().begin(), sig.entries().end());
  s.rotation = sig.rotation();
  s.n_k = n_k_jacobi(sig);
  s.parity_class = spin_parity_class(sig);
  return s;
}

nlohmann::ordered_json to_json(const SpinSummary& summary) {
  nlohmann::ordered_json doc;
  doc["k"] = summary.k;
  doc["genus"] = summary.genus;
  doc["mu"] = summary.mu;
  doc["rotation"] = summary.rotation ? nlohmann::ordered_json(*summary.rotation)
                                     : nlohmann::ordered_json(nullptr);
  doc["n_k"] = summary.n_k;
  doc["parity_class"] = summary.parity_class;
  return doc;
}

std::string render_plain(const SpinSummary& summary) {
  std::ostringstream os;
  os << "k: " << summary.k << '\n';
  os << "genus: " << summary.genus << '\n';
  os << "mu: " << join(summary.mu, ',') << '\n';
  if (summary.rotation) os << "rotation: " << *summary.rotation << '\n';
  os << "n_k: " << summary.n_k << '\n';
  os << "parity_class: " << summary.parity_class << '\n';
  return os.str();
}

std::string render_csv(const SpinSummary& summary) {
  std::ostringstream os;
  os << "k,genus,mu,rotation,n_k,parity_class\n";
  os << summary.k << ',' << summary.genus << ",\"" << join(summary.mu, ',')
     << "\",";
  if (summary.rotation) os << *summary.rotation;
  os << ',' << summary.n_k << ',' << summary.parity_class << '\n';
  return os.str();
}

}  // namespace spinparity
