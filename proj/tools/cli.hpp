#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ellfm::cli {

enum ExitCode : int { kSuccess = 0, kVerifyFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ellfm::cli
