#include <iostream>
#include <string>
#include <vector>

#include "fermatmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return fermatmod::cli::Run(args, std::cout, std::cerr);
}
