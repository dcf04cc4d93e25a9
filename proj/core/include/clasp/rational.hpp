#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace clasp {

// Exact rationals everywhere; no floating point touches a coefficient.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// "p/q" or "p"; throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text: "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return q.is_zero(); }

}  // namespace clasp
