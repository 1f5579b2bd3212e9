#pragma once

#include <string>
#include <vector>

#include "coalescent_cli/witness_io.hpp"

namespace coalescent::cli {

/// Exit codes: 0 when every requested check passed or gave a definitive
/// answer, 1 on a property failure or an undecided answer, 2 on input errors.
struct Report {
  std::string command;
  Json json;
  std::string text;
  int exit_code = 0;
  bool json_output = false;

  std::string render() const;
};

/// Runs one command line (without the program name). Never throws.
Report run(const std::vector<std::string>& args);

}  // namespace coalescent::cli
