#include <exception>
#include <iostream>

#include "pcglab/cli.hpp"

int main(int argc, char** argv) {
  try {
    return pcglab::cli::run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
}
