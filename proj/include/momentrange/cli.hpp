#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace momentrange::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDegenerate = 2,
  kIdentityViolation = 3,
};

/// Runs one command. `args` excludes the program name. Output goes to the
/// given streams only, so repeated calls are byte-for-byte comparable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace momentrange::cli
