#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pasp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
  kTrue = 0,         ///< query holds / answer sets found / command succeeded
  kFalse = 1,        ///< query fails / no consistent answer set
  kUsage = 2,        ///< bad arguments, unreadable file or malformed input
  kCapExceeded = 3,  ///< a resource cap was hit
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pasp::cli
