#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbundle {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitMathFailure = 1, kExitUsage = 2 };

/// Runs one invocation; args excludes the program name. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbundle
