#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace seqforge::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kResourceLimit = 3,
  kInconclusive = 4,
};

/// Environment variable that overrides the exhaustive enumeration limit. `--limit` wins.
inline constexpr const char* kLimitEnvVar = "SEQFORGE_ENUM_LIMIT";

/// Runs one command line. args[0] is the program name. `env_limit` carries the value of
/// SEQFORGE_ENUM_LIMIT, if set. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_limit = std::nullopt);

}  // namespace seqforge::cli
