#include <iostream>
#include <string>
#include <vector>

#include "morsecob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return morsecob::cli::run(args, std::cout, std::cerr);
}
