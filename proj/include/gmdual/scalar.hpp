#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gmdual {

/// Exact rational; GMP keeps it canonical (reduced, positive denominator).
using Scalar = mpq_class;

/// Parses "7", "-3", "2/5".  Throws ComputationError(InvalidInput) on junk.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& s);

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

}  // namespace gmdual
