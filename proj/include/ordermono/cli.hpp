#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordermono::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,          ///< malformed input or command-line usage error
  kDimension = 3,      ///< objects live on ground sets of different sizes
  kNotMultiUtility = 4,
  kInfeasible = 5,     ///< empty constraint set
  kPrecondition = 6,   ///< e.g. comparable inputs to an incomparability witness
  kConvergence = 7,
  kVerification = 8,   ///< a witness failed its exact re-check
};

/// Runs the `ordermono` command line. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`. The environment variable
/// ORDERMONO_SEED, when set, overrides --seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordermono::cli
