#pragma once

// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with string vectors and capture both streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace treeloc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;   // bad flags, unreadable or malformed input
inline constexpr int kExitDomain = 3;  // input well formed but outside a map's domain

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeloc::cli
