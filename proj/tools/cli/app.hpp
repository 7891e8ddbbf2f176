#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace inflanow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitConfig = 2,  // bad config file, override, flag or unknown spec
  kExitData = 3,    // unreadable, malformed or insufficient input data
  kExitNumerical = 4,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace inflanow::cli
