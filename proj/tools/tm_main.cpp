#include <iostream>
#include <vector>

#include "toep/cli.hpp"

int main(int argc, char** argv) {
  return toep::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
