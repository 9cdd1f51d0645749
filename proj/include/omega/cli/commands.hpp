#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omega::cli {

enum ExitCode : int { kSuccess = 0, kParseError = 1, kMathError = 2, kIndeterminate = 3 };

// Runs one omega-calc invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace omega::cli
