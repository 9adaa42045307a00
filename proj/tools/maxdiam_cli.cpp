#include <iostream>

#include "maxdiam/cli.hpp"

int main(int argc, char** argv) {
  return maxdiam::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
