#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cframe::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kMathError = 3, kIoError = 4 };

/// Runs the command line in-process; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cframe::cli
