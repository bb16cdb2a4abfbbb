#pragma once

#include <string>
#include <string_view>

#include "oscoh/arrangement.hpp"

namespace oscoh {

/// Parses an arrangement document (JSON). See docs/arrangement-format.md.
/// Errors are ParseError (syntax, with line and column) or the arrangement
/// module's validation errors prefixed with the offending row and its line.
Arrangement parse_arrangement(std::string_view text, bool essentialize_input = false);

Arrangement read_arrangement_file(const std::string& path, bool essentialize_input = false);

/// Realized arrangements are written as forms, matroid-backed ones as circuits.
std::string write_arrangement(const Arrangement& arr);

}  // namespace oscoh
