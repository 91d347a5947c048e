#include "spinparity/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "spinparity/floorcount.hpp"
#include "spinparity/jacobi.hpp"
#include "spinparity/report.hpp"
#include "spinparity/strata.hpp"
#include "spinparity/sweep.hpp"

namespace spinparity::cli {

namespace {

const std::vector<std::string> kFormats = {"plain", "json", "csv"};
const std::vector<std::string> kMethods = {"brute", "linear", "identity"};

std::vector<std::int64_t> parse_mu(const std::string& text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token =
        std::string_view(text).substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
    std::int64_t v = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size()) {
      throw InvalidArgument("--mu: cannot parse entry '" + std::string(token) +
                            "' as a 64-bit integer");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

void emit_scalar(std::ostream& out, OutputFormat format,
                 const nlohmann::ordered_json& fields, const char* value_key) {
  switch (format) {
    case OutputFormat::kPlain:
      out << fields[value_key].dump() << '\n';
      break;
    case OutputFormat::kJson:
      out << fields.dump() << '\n';
      break;
    case OutputFormat::kCsv: {
      std::string header;
      std::string row;
      for (const auto& [key, value] : fields.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        row += value.is_string() ? value.get<std::string>() : value.dump();
      }
      out << header << '\n' << row << '\n';
      break;
    }
  }
}

int emit_report(std::ostream& out, OutputFormat format,
                const SweepReport& report) {
  switch (format) {
    case OutputFormat::kPlain:
      out << render_plain(report);
      break;
    case OutputFormat::kJson:
      out << to_json(report).dump() << '\n';
      break;
    case OutputFormat::kCsv:
      out << render_csv(report);
      break;
  }
  return report.verdict() == Verdict::kPass ? kExitOk
                                            : kExitVerificationFailed;
}

// Options shared by every subcommand.
struct Common {
  std::string format = "plain";
  std::optional<int> jobs;

  OutputFormat output_format() const { return *parse_output_format(format); }
  int workers() const { return jobs ? *jobs : workers_from_environment(); }
};

void add_format(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(kFormats));
}

void add_jobs(CLI::App* app, Common& common) {
  app->add_option("--jobs", common.jobs,
                  "Worker threads (default: $SPINPARITY_JOBS or all cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Jacobi symbols, floor sums and spin parity of k-differentials",
               "spinparity"};
  app.require_subcommand(1);

  Common common;

  // jacobi <a> <k>
  std::int64_t jac_a = 0;
  std::int64_t jac_k = 0;
  auto* jac = app.add_subcommand("jacobi", "Jacobi symbol (a/k), k odd");
  jac->add_option("a", jac_a, "Numerator")->required();
  jac->add_option("k", jac_k, "Odd positive modulus")->required();
  add_format(jac, common);

  // fk <k> <a> [--naive]
  std::int64_t fk_k = 0;
  std::int64_t fk_a = 0;
  bool fk_naive = false;
  auto* fk = app.add_subcommand(
      "fk", "F_k(a) = sum_{i=1}^{m} floor((a i + m) / k), m = (k - 1) / 2");
  fk->add_option("k", fk_k, "Odd positive modulus")->required();
  fk->add_option("a", fk_a, "Argument")->required();
  fk->add_flag("--naive", fk_naive, "Sum term by term");
  add_format(fk, common);

  // nk <k> <n> [--method ...]
  std::int64_t nk_k = 0;
  std::int64_t nk_n = 0;
  std::string nk_method = "identity";
  auto* nk = app.add_subcommand("nk", "Pair count N_k(n)");
  nk->add_option("k", nk_k, "Odd positive modulus")->required();
  nk->add_option("n", nk_n, "Multiplier")->required();
  nk->add_option("--method", nk_method, "Counting method")
      ->check(CLI::IsMember(kMethods));
  add_format(nk, common);

  // spin --genus --k --mu [--rotation]
  int spin_genus = 0;
  std::int64_t spin_k = 0;
  std::string spin_mu;
  std::optional<std::int64_t> spin_rotation;
  auto* spin = app.add_subcommand(
      "spin", "n_k(mu) and the spin parity class of the stratum with orders 2 mu");
  spin->add_option("--genus", spin_genus, "Genus (0 or 1)")->required();
  spin->add_option("--k", spin_k, "Odd order k of the differential")
      ->required();
  spin->add_option("--mu", spin_mu, "Comma-separated entries m1,m2,...")
      ->required();
  spin->add_option("--rotation", spin_rotation,
                   "Rotation number d (genus 1 only)");
  add_format(spin, common);

  // verify {conjecture, identity, laws}
  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);

  std::int64_t v_k_min = 0;
  std::int64_t v_k_max = 0;
  std::int64_t v_n_max = 0;
  std::string v_method;

  auto* v_conj = verify->add_subcommand(
      "conjecture", "N_k(n) = floor((k+1)/4) (mod 2) for coprime n, n + 1");
  v_conj->add_option("--k-min", v_k_min, "Smallest odd k")->required();
  v_conj->add_option("--k-max", v_k_max, "Largest odd k")->required();
  v_conj->add_option("--method", v_method, "Counting method (default identity)")
      ->check(CLI::IsMember(kMethods));
  add_jobs(v_conj, common);
  add_format(v_conj, common);

  auto* v_ident = verify->add_subcommand(
      "identity", "N_k(n) = F_k(n + 1) - F_k(n) for all n in [0, n_max]");
  v_ident->add_option("--k-min", v_k_min, "Smallest odd k")->required();
  v_ident->add_option("--k-max", v_k_max, "Largest odd k")->required();
  v_ident->add_option("--n-max", v_n_max, "Largest n")->required();
  v_ident->add_option("--method", v_method,
                      "Definitional counting method (default brute)")
      ->check(CLI::IsMember(std::vector<std::string>{"brute", "linear"}));
  add_jobs(v_ident, common);
  add_format(v_ident, common);

  auto* v_laws = verify->add_subcommand(
      "laws", "Eisenstein, Gauss-Schering and (2/k) against the Jacobi symbol");
  v_laws->add_option("--k-max", v_k_max, "Largest odd k")->required();
  add_jobs(v_laws, common);
  add_format(v_laws, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const OutputFormat format = common.output_format();
  CLI::App* active = nullptr;
  try {
    if (jac->parsed()) {
      active = jac;
      const JacobiValue value = jacobi(jac_a, OddModulus{jac_k});
      emit_scalar(out, format,
                  {{"a", jac_a}, {"k", jac_k}, {"jacobi", value.value()}},
                  "jacobi");
      return kExitOk;
    }
    if (fk->parsed()) {
      active = fk;
      const OddModulus k{fk_k};
      const std::int64_t value = fk_naive ? f_k_naive(fk_a, k) : f_k(fk_a, k);
      emit_scalar(out, format,
                  {{"k", fk_k},
                   {"a", fk_a},
                   {"method", fk_naive ? "naive" : "fast"},
                   {"f_k", value}},
                  "f_k");
      return kExitOk;
    }
    if (nk->parsed()) {
      active = nk;
      const PairCountMethod method = *parse_pair_count_method(nk_method);
      const std::int64_t value = n_count(nk_n, OddModulus{nk_k}, method);
      emit_scalar(out, format,
                  {{"k", nk_k},
                   {"n", nk_n},
                   {"method", std::string(to_string(method))},
                   {"n_k", value}},
                  "n_k");
      return kExitOk;
    }
    if (spin->parsed()) {
      active = spin;
      const Signature sig(OddModulus{spin_k}, parse_mu(spin_mu), spin_genus,
                          spin_rotation);
      const SpinSummary summary = summarize(sig);
      switch (format) {
        case OutputFormat::kPlain:
          out << render_plain(summary);
          break;
        case OutputFormat::kJson:
          out << to_json(summary).dump() << '\n';
          break;
        case OutputFormat::kCsv:
          out << render_csv(summary);
          break;
      }
      return kExitOk;
    }
    if (v_conj->parsed()) {
      active = v_conj;
      SweepConfig cfg;
      cfg.k_min = v_k_min;
      cfg.k_max = v_k_max;
      cfg.n_policy = CoprimePairs{};
      cfg.method = *parse_pair_count_method(v_method.empty() ? "identity"
                                                             : v_method);
      cfg.workers = common.workers();
      return emit_report(out, format, sweep_conjecture(cfg));
    }
    if (v_ident->parsed()) {
      active = v_ident;
      SweepConfig cfg;
      cfg.k_min = v_k_min;
      cfg.k_max = v_k_max;
      cfg.n_policy = AllN{v_n_max};
      cfg.method =
          *parse_pair_count_method(v_method.empty() ? "brute" : v_method);
      cfg.workers = common.workers();
      return emit_report(out, format, sweep_identity(cfg));
    }
    if (v_laws->parsed()) {
      active = v_laws;
      return emit_report(out, format, sweep_laws(v_k_max, common.workers()));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (active != nullptr) err << active->help();
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace spinparity::cli
