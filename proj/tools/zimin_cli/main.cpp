#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  zimin::cli::App app;
  return app.run(args, std::cout, std::cerr);
}
