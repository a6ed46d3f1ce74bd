#include <iostream>
#include <string>
#include <vector>

#include "symcart_commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return symcart::cli::run_cli(args, std::cout, std::cerr);
}
