#include <iostream>
#include <string>
#include <vector>

#include "noisedim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return noisedim::run_cli(args, std::cout, std::cerr);
}
