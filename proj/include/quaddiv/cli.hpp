#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quaddiv {

/// Process exit codes used by the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,     // overflow, resource exhaustion, failed verification
  kExitInvalid = 2,     // malformed arguments or out-of-domain input
  kExitHypothesis = 3,  // sigma_{-1}(Omega) <= 4/3 not satisfied
};

/// Runs the CLI on args (args[0] is the program name). Results go to `out`,
/// diagnostics and timing to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quaddiv
