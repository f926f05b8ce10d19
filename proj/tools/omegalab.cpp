#include <iostream>

#include "omegalab/cli.hpp"

int main(int argc, char** argv) {
  return omegalab::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout,
                           std::cerr);
}
