#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rpsl::cli {

enum ExitStatus : int {
  Success = 0,
  DiagnosticErrors = 1,
  UsageError = 2,
  RuntimeFailure = 3,
};

/// Runs one command line (args[0] is the program name). Output goes to
/// `out`, diagnostics and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rpsl::cli
