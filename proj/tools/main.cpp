#include <iostream>
#include <string>
#include <vector>

#include "starcheck/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return starcheck::run_cli(args, std::cout, std::cerr);
}
