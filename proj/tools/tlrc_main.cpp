#include <iostream>
#include <string>
#include <vector>

#include "tlrc/cli.hpp"

int main(int argc, char** argv) {
  return tlrc::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
