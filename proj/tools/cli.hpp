#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace drfwl::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kCapabilityError = 3,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace drfwl::cli
