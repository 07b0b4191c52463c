#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace wops {

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
Rational parse_rational(const std::string& text);

// Rising factorial (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int k);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace wops
