#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace s1fix::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNotRealizable = 1;
inline constexpr int kInvalidInput = 2;

// `args` excludes the program name. `in` backs the "-" file argument.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace s1fix::cli
