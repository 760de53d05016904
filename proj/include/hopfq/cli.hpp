#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfq {

// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInvariant = 1, kExitParse = 2, kExitContract = 3 };

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfq
