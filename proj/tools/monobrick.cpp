#include <iostream>
#include <string>
#include <vector>

#include "monobrick/io/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return monobrick::io::run_cli(args, std::cin, std::cout, std::cerr);
}
