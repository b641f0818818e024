#include <iostream>

#include "rank2/cli.hpp"

int main(int argc, char** argv) {
  return rank2::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
