#pragma once

#include <gmpxx.h>

#include <string>

namespace leibkit {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as construction goes through the
/// helpers below; raw two-argument construction does not canonicalize.
using Scalar = mpq_class;

/// Exact rational from an integer pair. Throws Error on a zero denominator.
Scalar rational(long num, long den = 1);

/// Parses "p", "-p", "p/q". Throws Error on malformed text or q == 0.
Scalar parse_rational(const std::string& text);

/// Canonical text form: "p" or "p/q" with q > 1.
std::string to_string(const Scalar& value);

}  // namespace leibkit
