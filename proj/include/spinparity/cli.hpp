#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinparity::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit code:
/// 0 success/PASS, 1 verification FAIL, 2 usage, validation or capacity
/// error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace spinparity::cli
