#include <iostream>
#include <string>
#include <vector>

#include "kmoments/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return kmoments::cli::run(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kmoments::cli::kMismatch;
  }
}
