#include "linklab/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return linklab::run_cli(args, std::cin, std::cout, std::cerr);
  } catch (const std::exception &e) {
    std::cerr << "linklab: internal error: " << e.what() << "\n";
    return 1;
  }
}
