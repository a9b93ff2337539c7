#pragma once

#include <string>
#include <vector>

namespace lietrees::cli {

/// Outcome of one invocation. Nothing is written to `out` unless the
/// command succeeded; exit codes are 0 success, 1 domain error, 2 usage.
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command; `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace lietrees::cli
