#include <iostream>

#include "tricover/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return tricover::cli::run(args, std::cout, std::cerr);
}
