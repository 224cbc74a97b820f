#include <iostream>
#include <string>
#include <vector>

#include "evlogic/cli.hpp"

int main(int argc, char** argv) {
  return evlogic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
