#include <iostream>

#include "rubbertaut/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rubbertaut::cli::run(args, std::cout, std::cerr);
}
