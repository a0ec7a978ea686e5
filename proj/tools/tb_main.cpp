#include <iostream>
#include <iterator>

#include "tb/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto read_stdin = [] { return std::string(std::istreambuf_iterator<char>(std::cin), {}); };
  tb::cli::Result r = tb::cli::run(args, tb::cli::InputSource(read_stdin));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
