#include <iostream>
#include <string>
#include <vector>

#include "qherglotz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qherglotz::cli::run(args, std::cout, std::cerr);
}
