#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foxdiv::app {

enum ExitCode : int {
  exit_ok = 0,
  /// The analysis ran and answered no (not divisible, no kernel vector, ...).
  exit_negative = 1,
  exit_input_error = 2,
  exit_limit_exceeded = 3,
};

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics and error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace foxdiv::app
