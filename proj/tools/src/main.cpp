#include <iostream>

#include "qpoisson/cli.hpp"

int main(int argc, char** argv) {
  return qpoisson::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
