#include <iostream>

#include "oeuvre/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return oeuvre::cli::run(args, std::cout, std::cerr);
}
