#include <iostream>

#include "knotsig/cli.hpp"

int main(int argc, char** argv) {
  return knotsig::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
