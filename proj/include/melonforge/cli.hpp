#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace melonforge::cli {

enum ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kNoConvergence = 3,
  kUsage = 64,
  kIo = 74,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from MELONFORGE_THREADS, defaulting to the hardware count.
int worker_count();

}  // namespace melonforge::cli
