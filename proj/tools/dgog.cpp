#include "dgog/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dgog::cli::run(args, std::cin, std::cout, std::cerr);
}
