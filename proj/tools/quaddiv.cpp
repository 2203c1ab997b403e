#include <iostream>
#include <string>
#include <vector>

#include "quaddiv/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return quaddiv::run_cli(args, std::cout, std::cerr);
}
