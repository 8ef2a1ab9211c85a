#include <iostream>
#include <string>
#include <vector>

#include "spinkirby/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spinkirby::cli::run(args, std::cout, std::cerr);
}
