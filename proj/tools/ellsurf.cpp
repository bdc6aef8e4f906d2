#include <iostream>
#include <string>
#include <vector>

#include "ellsurf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  ellsurf::RunResult result = ellsurf::run(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.code;
}
