#pragma once

#include <iosfwd>

namespace pluricalc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

// Parses argv, dispatches to a subcommand and writes its JSON report to out
// (or --out FILE). Diagnostics go to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pluricalc::cli
