#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "naples/core.hpp"

namespace naples::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitBadInput = 2;

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// "a,b,c" with optional whitespace and an optional surrounding [] or ().
PrefSeq parse_prefs(std::string_view text);

}  // namespace naples::cli
