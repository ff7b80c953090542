#include <iostream>
#include <vector>

#include "sfq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sfq::cli::run_cli(args, std::cout, std::cerr);
}
