#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hecke {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", and finite decimals such as "-0.25".
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& q);

/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

bool is_integer(const Rational& q);

int sign_of(const Rational& q);

Rational abs_of(const Rational& q);

Integer lcm_of(const Integer& a, const Integer& b);

/// Least common multiple of all denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace hecke
