#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dioph {

struct CommandOutput {
  std::string out;
  std::string err;
  int code = 0;  // 0 ok, 2 invalid input, 3 precision/infeasible, 4 internal
};

/// Runs one `dioph` invocation; `args` excludes the program name. Output goes
/// to `out` unless --out names a file.
CommandOutput run_command(const std::vector<std::string>& args, std::istream& in);

}  // namespace dioph
