#include <iostream>
#include <string>
#include <vector>

#include "og10/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return og10::cli::run(args, std::cout, std::cerr);
}
