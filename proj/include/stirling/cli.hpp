#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirling::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvariantViolation = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (without the program name). Results go to `out`,
// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirling::cli
