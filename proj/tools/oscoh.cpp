#include <iostream>
#include <string>
#include <vector>

#include "oscoh/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return oscoh::run(args, std::cout, std::cerr);
}
