#include <iostream>

#include "hyperspec/cli.hpp"

int main(int argc, char** argv) {
  return hyperspec::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
