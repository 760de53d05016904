#include <iostream>

#include "hopfq/cli.hpp"

int main(int argc, char** argv) {
  return hopfq::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
