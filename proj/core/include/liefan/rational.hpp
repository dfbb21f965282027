#pragma once

#include <gmpxx.h>

#include <string>

namespace liefan {

// Exact arithmetic everywhere. Weyl vectors and projections of special
// injections produce halves and thirds; floating point would break weight
// equality used as a map key. mpq_class keeps fractions reduced, so value
// equality equals representational equality.
using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p/q" or "p" (decimal integers). Throws ConfigError on malformed
/// input or zero denominator.
Rat rat_from_string(const std::string& text);

/// Renders a reduced fraction as "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& value);

std::string int_to_string(const Int& value);

/// True if the rational is an integer.
bool rat_is_integer(const Rat& value);

/// Largest integer s with s*s <= value (value must be >= 0).
Int isqrt_floor(const Rat& value);

} // namespace liefan
