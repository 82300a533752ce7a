#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  spinlab::cli::Streams io{std::cout, std::cerr, std::cin, ::isatty(STDIN_FILENO) != 0};
  return spinlab::cli::run(args, io);
}
