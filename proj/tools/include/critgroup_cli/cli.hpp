#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace critgroup::cli {

/// Exit codes: 0 all verdicts pass, 1 a theorem was violated (or a
/// hypothesis failed under --strict, or the library rejected the input),
/// 2 the command line or a graph could not be parsed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitParse = 2;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace critgroup::cli
