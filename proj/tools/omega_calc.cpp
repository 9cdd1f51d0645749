#include <iostream>

#include "omega/cli/commands.hpp"

int main(int argc, char** argv) {
  return omega::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
