#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selmer/error.hpp"

namespace selmer::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitHypothesis = 2,
  kExitPrecision = 3,
  kExitUsage = 64,
};

int exit_code_for(ErrorCode code);

/// Runs the tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selmer::cli
