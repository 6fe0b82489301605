// nlr: verify, cohomology, extend, crossed and fixture commands over JSON bundles.

#include <iostream>
#include <string>
#include <vector>

#include "nlr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlr::cli::run(args, std::cout, std::cerr);
}
