#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace quadinc {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Builds num/den in lowest terms. Throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long long num, long long den = 1);

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);

int sign(const Rational& r);
bool is_zero(const Rational& r);
bool is_integer(const Rational& r);

/// "p/q", with "/q" omitted when q == 1.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q" (q may be negative or non-reduced; the result is
/// normalized). Throws InputError on anything else.
Rational parse_rational(std::string_view text);

/// Exact square root when r is the square of a rational; false otherwise.
bool rational_sqrt(const Rational& r, Rational& root);

/// Lowest common multiple of the denominators / gcd of integers.
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace quadinc
