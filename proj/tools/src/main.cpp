#include <iostream>
#include <string>
#include <vector>

#include "hopf4d/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopf4d::cli::run(args, std::cout, std::cerr);
}
