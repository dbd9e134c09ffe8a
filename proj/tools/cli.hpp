#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eulerops::cli {

// Exit codes.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

// Runs one command line (args excludes the program name) and returns the
// exit code. Output goes to `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerops::cli
