#include <iostream>

#include "sogkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sogkit::run(args, std::cout, std::cerr);
}
