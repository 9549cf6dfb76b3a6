#pragma once

#include <gmpxx.h>

#include <string>

namespace m0k {

/// Parses an exact rational written as "p" or "p/q" with decimal integers.
/// Rejects anything else (floats, whitespace, empty parts).
mpq_class parse_rational(const std::string& text);

std::string rational_to_string(const mpq_class& q);

}  // namespace m0k
