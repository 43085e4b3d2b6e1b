#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spanv::cli {

// Exit codes of every command.
enum Exit : int { pass = 0, check_failure = 1, input_error = 2 };

// Runs one command line (args excludes the program name) and returns the
// exit code. Reports go to out, usage and input errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spanv::cli
