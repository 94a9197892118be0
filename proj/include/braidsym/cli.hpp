#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidsym {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,     // a verdict came out negative: not equal, or a check failed
  kExitUsage = 2,     // bad arguments or unparsable input
  kExitResource = 3,  // a word-length cap was exceeded
};

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidsym
