#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monobrick::io {

enum ExitCode : int {
  kOk = 0,
  kChecksFailed = 1,
  kUsage = 2,
  kBudget = 3,
  kInvalidInput = 4,
};

/// Runs one command; `args` excludes the program name. Diagram input comes
/// from --in, --diagram or `in`; output goes to --out or `out`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace monobrick::io
