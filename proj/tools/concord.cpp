#include <iostream>

#include "concord/cli.hpp"

int main(int argc, char** argv) {
  return concord::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
