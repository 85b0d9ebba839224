#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace gfrob {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always canonical: denominator > 0, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p" or "p/q" with optional signs on either part. Throws ParseError.
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

} // namespace gfrob
