#include "srr/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv) {
  try {
    return srr::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}
