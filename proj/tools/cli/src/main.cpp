#include <iostream>

#include "coalescent_cli/app.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = coalescent::cli::run(args);
  (report.exit_code == 2 && !report.json_output ? std::cerr : std::cout) << report.render();
  return report.exit_code;
}
