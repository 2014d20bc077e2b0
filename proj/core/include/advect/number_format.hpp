#pragma once

#include <string>
#include <string_view>

namespace advect {

/// Shortest decimal string that parses back to the same double ("nan", "inf", "-inf" otherwise).
std::string format_double(double x);

/// Strict parse of a full decimal string; throws InvalidInput.
double parse_double(std::string_view text);

}  // namespace advect
