#pragma once

#include <string>

#include "polyspace/core.hpp"

namespace polyspace {

/// Parses a comma-separated list of positive lengths. Decimal entries are
/// read as exact rationals and the whole vector is scaled by the common
/// denominator, so genericity is never decided in floating point. Throws
/// input_error naming the offending token.
LengthVector parse_lengths(const std::string& text);

}  // namespace polyspace
