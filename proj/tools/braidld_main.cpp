#include <iostream>
#include <string>
#include <vector>

#include "braidld/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidld::cli::run(
      args, std::cout, std::cerr, braidld::cli::options_from_environment());
}
