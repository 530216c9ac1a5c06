#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmchoice {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitDataError = 1, kExitUsage = 2 };

/// Runs the tool on argv[1..] and writes the report to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmchoice
