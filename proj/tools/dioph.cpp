#include "dioph/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  dioph::CommandOutput r = dioph::run_command(args, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
