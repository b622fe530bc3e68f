#include <iostream>

#include "crosscap/cli.hpp"

int main(int argc, char** argv) {
  return crosscap::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
