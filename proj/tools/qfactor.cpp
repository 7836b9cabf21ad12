#include <iostream>
#include <string>
#include <vector>

#include "qfactor_cli/report.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return qfactor::cli::run_main(args, std::cout, std::cerr);
}
