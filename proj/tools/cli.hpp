#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumdiv::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCapExceeded = 2,
  kInvariantViolation = 3,
};

// args excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumdiv::cli
