#include <string>
#include <vector>

#include "implinet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return implinet::cli::run_cli(std::move(args));
}
