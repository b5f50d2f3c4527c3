#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icode::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidInput = 2,
  kInconclusive = 3,
};

/// Runs one command. `args` excludes the program name. Data goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icode::cli
