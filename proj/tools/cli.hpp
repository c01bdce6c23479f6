#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyonwell::cli {

enum ExitCode { kOk = 0, kValidation = 2, kSolver = 3, kIo = 4 };

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyonwell::cli
