#include <iostream>
#include <string>
#include <vector>

#include "qfarey/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfarey::run(args, std::cout, std::cerr);
}
