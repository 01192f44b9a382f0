#include <iostream>
#include <vector>

#include "qwe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qwe::cli::run(args, std::cout, std::cerr);
}
