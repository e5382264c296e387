#pragma once

#include <string>
#include <vector>

namespace fibrekit::workbench {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitVerification = 4,
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;  // report document (empty when written to --out)
  std::string err;  // diagnostics; machine-readable JSON on failure
};

/// Runs one workbench invocation. `args` excludes the program name, e.g.
/// {"alexander", "--surface", "1,1", "--word", "a1 b1"}.
CliResult run(const std::vector<std::string>& args);

}  // namespace fibrekit::workbench
