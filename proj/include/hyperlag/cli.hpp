#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperlag::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,  // mismatch, failed hypothesis, or non-strict inequality
  kUsage = 2,   // bad arguments or unreadable input
};

/// Runs one invocation. `args` excludes the program name. The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlag::cli
