#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace texturematrix::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitDegenerate = 2,
  kExitUsage = 64,
};

/// Runs one invocation. args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace texturematrix::cli
