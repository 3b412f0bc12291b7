#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurlc::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_usage = 2,
  exit_io = 3,
  exit_corrupt_cache = 4,
};

// Runs one command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace schurlc::cli
