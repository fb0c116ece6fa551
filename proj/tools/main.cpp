// SPDX-License-Identifier: MIT
#include <algorithm>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include <unistd.h>

#include "seqprop/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string in;
  const bool wants_stdin = std::find(args.begin(), args.end(), "-") != args.end();
  if (wants_stdin && !isatty(STDIN_FILENO)) {
    in.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  const seqprop::cli::Result r = seqprop::cli::run(args, in);
  std::cout << r.out;
  std::cerr << r.err;
  return r.code;
}
