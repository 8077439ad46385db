#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trirealize::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trirealize::cli
