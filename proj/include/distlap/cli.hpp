#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace distlap {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Runs one command line (without the program name). Subcommands: spectrum,
/// family, graft, enumerate, extremal, sweep, profile.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace distlap
