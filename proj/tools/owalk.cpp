#include <iostream>
#include <string>
#include <vector>

#include "owalk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return owalk::cli::run(args, std::cout, std::cerr);
}
