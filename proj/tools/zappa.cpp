#include <iostream>
#include <string>
#include <vector>

#include "zappa/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return zappa::cli::run(args, std::cout, std::cerr);
}
