#include <iostream>
#include <string>
#include <vector>

#include "fibercone/clirun.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fibercone::run_cli(std::move(args), std::cout, std::cerr);
}
