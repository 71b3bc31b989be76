#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdp {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailures = 1,      ///< check found failing theorems; usage and I/O errors
  kExitInvalid = 2,       ///< parse/validation error, bad parameters, cap exceeded
  kExitNoZeroDivisors = 3,
};

/// Runs `zdposet <args...>` (args exclude the program name) against the
/// given streams and returns the exit code. `input` backs the path "-".
int run_cli(const std::vector<std::string> &args, std::istream &input, std::ostream &out,
            std::ostream &err);

} // namespace zdp
