#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toughspec::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,    ///< bad flags, unreadable or malformed input, violated hypotheses
  kFinding = 2,  ///< a counterexample or a failed mathematical check
};

struct CommandOutcome {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). `in` backs "--in -".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Same, capturing both streams; stdin is empty.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace toughspec::cli
