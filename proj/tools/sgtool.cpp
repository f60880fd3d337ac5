#include "sg/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = sg::cli::dispatch(std::move(args));
  std::cout << result.rendered();
  for (const auto& d : result.diagnostics) std::cerr << "sgtool: " << d << '\n';
  return result.exit_code;
}
