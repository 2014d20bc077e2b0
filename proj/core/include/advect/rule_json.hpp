#pragma once

#include "advect/two_moment.hpp"

#include <string>

namespace advect {

/// {"scheme_id", "offsets", "a", "b", "c", "d", "slope_row"}; each table is aligned with
/// offsets and each polynomial is an array of [numerator, denominator] pairs (index = power).
std::string rule_to_json(const TwoMomentRule& rule, int indent = 2);

/// Throws InvalidInput on malformed documents. "slope_row" is optional (default incremental).
TwoMomentRule rule_from_json(const std::string& text);

}  // namespace advect
