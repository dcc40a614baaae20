#include <iostream>
#include <string>
#include <vector>

#include "cnz/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cnz::cli::run(args, std::cout);
}
