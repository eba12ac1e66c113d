#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterability::cli {

inline constexpr const char* tool_version = "0.1.0";

enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_verify_fail = 2 };

/// Runs one command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterability::cli
