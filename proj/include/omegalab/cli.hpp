#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace omegalab {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

/// Runs the command line `args` (without the program name). Reads batch
/// input from `in`; results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace omegalab
