#include <iostream>

#include "reexp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  reexp::cli::CliInvocation inv;
  try {
    inv = reexp::cli::parse_args(args);
  } catch (const reexp::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n"
              << "run 'reexp --help' for the list of subcommands\n";
    return 2;
  }
  return reexp::cli::run(inv, std::cout, std::cerr);
}
