#include <iostream>
#include <string>
#include <vector>

#include "httpld/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return httpld::cli::run(std::move(args), std::cin, std::cout, std::cerr);
}
