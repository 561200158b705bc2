#include <iostream>
#include <string>
#include <vector>

#include "sgconj/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgconj::run_cli(args, std::cout);
}
