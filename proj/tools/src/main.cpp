#include <iostream>
#include <string>
#include <vector>

#include "fcat_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fcat::cli::run(args, std::cout, std::cerr);
}
