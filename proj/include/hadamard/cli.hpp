#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadamard::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,           ///< bad or inconsistent flags
  kDomain = 3,          ///< domain error while evaluating
  kBoundViolation = 4,  ///< |approx - exact| exceeded bound + slack
  kNonFinite = 5,       ///< FDE state became NaN or infinite
};

/// Absolute slack allowed on top of the truncation bound in `compare`.
inline constexpr double kBoundSlack = 1e-7;

/// Runs one invocation. args[0] is the program name, args[1] the subcommand
/// (approx | compare | sweep | fde). CSV goes to `out` unless --out is given;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hadamard::cli
