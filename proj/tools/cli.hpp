#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tempcal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kOptimization = 3,
};

/// Runs the tool. args[0] is the program name. Status messages go to `out`,
/// errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tempcal::cli
