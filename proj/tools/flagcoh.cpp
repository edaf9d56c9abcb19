#include <cstdlib>
#include <iostream>

#include "flagcoh/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return flagcoh::main_entry(args, std::getenv("FLAGCOH_SEED"), std::cout, std::cerr);
}
