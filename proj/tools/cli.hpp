#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rslab::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,         // Established, holds, or every row passed
  kNegative = 1,   // Refuted, does not hold, or some row failed
  kBadInput = 2,   // invalid parameters or unparseable input
  kUndecided = 3,  // budget exhausted or census poisoned by Unknown
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rslab::cli
