#include <iostream>
#include <string>
#include <vector>

#include "asymprod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return asymprod::run_cli(args, std::cout, std::cerr);
}
