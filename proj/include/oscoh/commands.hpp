#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oscoh/rational.hpp"

namespace oscoh {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCertificateFails = 2;

/// Runs `oscoh <command> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated exact rationals, e.g. "1/3,-2/3,0".
std::vector<Rational> parse_weight_list(std::string_view text);
/// Comma-separated integers.
std::vector<Integer> parse_integer_list(std::string_view text);

}  // namespace oscoh
