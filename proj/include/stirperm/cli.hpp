#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stirperm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Largest order enumerated without --force.
inline constexpr int kDefaultOrderLimit = 8;

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirperm
