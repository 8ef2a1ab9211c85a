#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinkirby::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,         // unreadable, malformed or mathematically invalid input
  kPreconditionError = 3,  // valid input that violates an operation's precondition
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinkirby::cli
