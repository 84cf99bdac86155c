#include <iostream>

#include "groversim_cli.hpp"

int main(int argc, char** argv) {
  return groversim::cli::run(argc, argv, std::cout, std::cerr);
}
