#include <iostream>

#include "dmt/cli.hpp"

int main(int argc, char** argv) {
  return dmt::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
