#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "spinparity/strata.hpp"
#include "spinparity/sweep.hpp"

namespace spinparity {

enum class OutputFormat { kPlain, kJson, kCsv };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// Exact CSV header of a rendered SweepReport.
inline constexpr std::string_view kCounterexampleCsvHeader =
    "check,k,n,observed,expected";

/// Sweep reports. Timing (elapsed_ms, workers) lives under the "timing" key
/// in JSON and on the last line of plain output; CSV never carries it.
nlohmann::ordered_json to_json(const SweepReport& report, bool with_timing = true);
std::string render_plain(const SweepReport& report, bool with_timing = true);
std::string render_csv(const SweepReport& report);

/// Result of the spin subcommand.
struct SpinSummary {
  std::int64_t k = 0;
  int genus = 0;
  std::vector<std::int64_t> mu;
  std::optional<std::int64_t> rotation;
  std::int64_t n_k = 0;
  int parity_class = 0;
};

SpinSummary summarize(const Signature& sig);

nlohmann::ordered_json to_json(const SpinSummary& summary);
std::string render_plain(const SpinSummary& summary);
std::string render_csv(const SpinSummary& summary);

}  // namespace spinparity
