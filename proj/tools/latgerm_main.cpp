#include <iostream>
#include <string>
#include <vector>

#include "latgerm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return latgerm::run(args, std::cout, std::cerr);
}
