#include <iostream>
#include <string>
#include <vector>

#include "tracealg/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto out = tracealg::cli::run(args);
  if (!out.log.empty()) std::cerr << out.log;
  std::cout << out.doc.dump(2) << "\n";
  return out.exit_code;
}
