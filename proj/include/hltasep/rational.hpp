#pragma once

#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace hltasep {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;
/// 50 significant decimal digits; used when alpha is not rational.
using HighPrecision = boost::multiprecision::cpp_dec_float_50;

/// Exact parse of "p/q", integers and finite decimals ("0.75" -> 3/4).
Rational parse_rational(const std::string& text);

/// The exact binary value of a double.
Rational rational_from_double(double x);

double to_double(const Rational& q);
HighPrecision to_high_precision(const Rational& q);
std::string to_string(const Rational& q);

Rational binomial(int n, int k);

}  // namespace hltasep
