#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gspin {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_property_failure = 3;
inline constexpr int exit_unsupported = 4;

// Entry point behind the gspin binary.  `args` excludes the program name;
// `in` backs instance input from "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gspin
