#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "trideg/errors.hpp"

namespace trideg {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
// cpp_rational maintains exactly these invariants; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "n" for integers and "n/d" otherwise.
std::string to_string(const Rational& r);

// Accepts "n" or "n/d" with optional leading sign; throws ParseError otherwise.
Rational rational_from_string(const std::string& text);

// True iff r is the square of a rational (exact test on numerator/denominator).
bool is_square(const Rational& r);

} // namespace trideg
