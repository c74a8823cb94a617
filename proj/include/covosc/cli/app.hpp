#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covosc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitTolerance = 2,
  kExitIo = 3,
};

/// Environment variable naming the directory used when --out is absent.
inline constexpr const char* kOutputDirEnv = "COVOSC_OUTPUT_DIR";

/// Runs the command line (args excludes the program name). Data goes to
/// --out, then $COVOSC_OUTPUT_DIR/<command>.<ext>, then `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covosc::cli
