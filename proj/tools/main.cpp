#include <iostream>

#include "cli_impl.hpp"

int main(int argc, char** argv) {
  return quiverpath::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
