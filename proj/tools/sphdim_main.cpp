#include <iostream>

#include "sphdim/cli.hpp"

int main(int argc, char** argv) {
  return sphdim::run_main(argc, argv, std::cout, std::cerr);
}
