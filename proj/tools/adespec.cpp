#include <iostream>
#include <string>
#include <vector>

#include "adespec/app/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return adespec::app::run(args, std::cout, std::cerr);
}
