#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace origami::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kNegative = 3,
  kUnknown = 4,
  kCapExceeded = 5,
};

// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
