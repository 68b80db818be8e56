#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grouplab {

enum ExitCode : int { kExitPass = 0, kExitViolation = 1, kExitInput = 2, kExitCap = 3 };

/// Runs the command line given without the program name. Output goes to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouplab
