#include <iostream>
#include <string>
#include <vector>

#include "hafs/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hafs::cli::run(args, std::cin, std::cout, std::cerr);
}
