#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hfejer::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that overrides the default working precision.
inline constexpr const char* kPrecisionEnv = "HFEJER_PRECISION_BITS";

/// Runs one command line (args[0] is the program name). Results go to `out`
/// as JSON lines or text, diagnostics to `err`. Returns 0 when every check
/// performed passed, 1 when any failed, 2 on usage or configuration errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hfejer::cli
