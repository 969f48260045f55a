#include <iostream>
#include <string>
#include <vector>

#include "dk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return dk::cli::runCli(args, std::cout);
}
