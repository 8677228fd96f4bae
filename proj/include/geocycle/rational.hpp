#ifndef GEOCYCLE_RATIONAL_HPP
#define GEOCYCLE_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace geocycle {

// Exact rational scalar. All geometric predicates are computed over this
// type; floating point is confined to SVG output.
using Rational = mpq_class;

// Parses "p", "-p" or "p/q" (q > 0). Anything else, including decimal
// points and whitespace, is rejected.
Rational parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& value);

} // namespace geocycle

#endif
