#include <iostream>

#include "flagtri/cli.hpp"

int main(int argc, char** argv) {
  return flagtri::run_cli(argc, argv, std::cout, std::cerr);
}
