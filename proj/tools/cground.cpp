#include <iostream>

#include "cground/cli.hpp"

int main(int argc, char** argv) {
  return cground::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
