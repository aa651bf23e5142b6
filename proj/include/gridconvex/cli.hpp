#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridconvex::cli {

/// Process exit codes. A non-convex verdict is a successful analysis.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,         // unparsable flags, invalid values, malformed input files
  kGridTooLarge = 3,  // lattice cannot be materialized
  kNoEpsilon = 4,     // --auto-eps / select-eps found no unique-cluster eps
};

/// Runs the command line `args` (without the program name) and returns the
/// exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gridconvex::cli
