#include <iostream>
#include <string>
#include <vector>

#include "fstego/cli.hpp"

int main(int argc, char** argv) {
  return fstego::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
