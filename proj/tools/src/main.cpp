#include <iostream>

#include "boxworld_cli/cli.hpp"

int main(int argc, char** argv) {
  return boxworld::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
