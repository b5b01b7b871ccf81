#include <iostream>

#include "groupk/cli.hpp"

int main(int argc, char** argv) {
  return groupk::cli::run(argc, argv, std::cout, std::cerr);
}
