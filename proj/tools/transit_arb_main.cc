#include <iostream>
#include <string>
#include <vector>

#include "transit_arb/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> const args(argv, argv + argc);
  return transit_arb::cli::run_cli(args, std::cout, std::cerr);
}
