#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zcap {

/// Exit-code contract of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalsified = 1, kExitUsage = 2 };

/// Runs the `zcap` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace zcap
