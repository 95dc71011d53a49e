#include <iostream>
#include <string>
#include <vector>

#include "pcard/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcard::cli::run(args, std::cout, std::cerr);
}
