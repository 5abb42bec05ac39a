#include <iostream>
#include <string>
#include <vector>

#include "hanpiece/cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return hanpiece::RunCli(args, std::cin, std::cout, std::cerr);
}
