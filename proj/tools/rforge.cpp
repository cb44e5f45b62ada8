#include <iostream>

#include "rf/cli.hpp"

int main(int argc, char** argv) {
  return rf::cli::run_cli(argc, argv, std::cout, std::cerr);
}
