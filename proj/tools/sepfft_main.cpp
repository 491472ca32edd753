#include <iostream>

#include "sepfft/cli.hpp"

int main(int argc, char** argv) {
  return sepfft::cli::run(argc, argv, std::cout, std::cerr);
}
