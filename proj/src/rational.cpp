#include "hltasep/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hltasep {

namespace {

BigInt parse_integer(const std::string& digits, const std::string& whole) {
  if (digits.empty()) throw std::invalid_argument("cannot parse number '" + whole + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("cannot parse number '" + whole + "'");
  }
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  if (text.empty()) throw std::invalid_argument("empty number");
  bool negative = false;
  std::string body = text;
  if (body[0] == '-' || body[0] == '+') {
    negative = body[0] == '-';
    body = body.substr(1);
  }
  Rational value;
  if (const auto slash = body.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(body.substr(0, slash), text);
    const BigInt den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(num, den);
  } else if (const auto dot = body.find('.'); dot != std::string::npos) {
    const std::string int_part = body.substr(0, dot);
    const std::string frac_part = body.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("cannot parse number '" + text + "'");
    const BigInt ip = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    const BigInt fp = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    value = Rational(ip) + Rational(fp, scale);
  } else {
    value = Rational(parse_integer(body, text));
  }
  return negative ? Rational(-value) : value;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  const Rational r{BigInt(scaled)};
  exp -= 53;
  BigInt p = 1;
  p <<= static_cast<unsigned>(std::abs(exp));
  return exp >= 0 ? Rational(r * p) : Rational(r / p);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

HighPrecision to_high_precision(const Rational& q) {
  return HighPrecision(numerator(q).str()) / HighPrecision(denominator(q).str());
}

std::string to_string(const Rational& q) { return q.str(); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return Rational(0);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return Rational(r);
}

}  // namespace hltasep
