#include <iostream>
#include <vector>

#include "devissage/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return devissage::run_cli(args, std::cout, std::cerr);
}
