#pragma once

// Command-line front end. Exit codes: 0 success, 1 invalid input or usage,
// 2 capacity limit exceeded, 3 a verification check failed.

#include <iosfwd>
#include <string>
#include <vector>

namespace wpp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitCheckFailed = 3;

// args excludes the program name; `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace wpp::cli
