#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chordweight::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

/// Runs the command line given without the program name. Results go to out,
/// diagnostics and progress to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chordweight::cli
