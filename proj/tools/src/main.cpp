#include <iostream>
#include <string>
#include <vector>

#include "selmer/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return selmer::cli::run_cli(args, std::cout, std::cerr);
}
