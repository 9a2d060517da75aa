#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace unav::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputParse = 2,
  kNotCertified = 3,
  kAbstained = 4,
  kBudgetExceeded = 5,
};

/// Runs the `unav` command line. `args` excludes the program name. Results go
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The JSON schema of `--json` reports.
const char* report_schema();

}  // namespace unav::cli
