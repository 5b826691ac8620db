#pragma once

#include <string>
#include <vector>

namespace implinet::cli {

/// Parses and runs one command line (without the program name). Returns
/// the process exit code: 0 on success, 2 for invalid input or config,
/// 3 for I/O or internal failure. Used by main() and called in-process by
/// the CLI tests.
int run_cli(std::vector<std::string> args);

}  // namespace implinet::cli
