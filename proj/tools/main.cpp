#include <iostream>
#include <string>
#include <vector>

#include "lpdo/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return lpdo::run_command(args, std::cout, std::cerr);
}
