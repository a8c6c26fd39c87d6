#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace torext {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParse = 2,
  kExitDimension = 3,
  kExitNotSymmetric = 4,
  kExitNotCompletelyReducible = 5,
  kExitInternal = 6,
};

// Runs one invocation; args excludes the program name. Payload goes to out,
// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torext
