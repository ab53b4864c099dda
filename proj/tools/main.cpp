#include <iostream>
#include <string>
#include <vector>

#include "walkreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return walkreg::cli::run(args, std::cout, std::cerr);
}
