#include "k3cone/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const k3cone::CommandResult r = k3cone::dispatch(args, &std::cerr);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
