#include "hermk/rational.hpp"

#include <stdexcept>

namespace hermk {

Rational rat(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational rat(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("parse_rational: malformed value '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

SquareSplit split_square(const Integer& value) {
  if (value <= 0) throw std::invalid_argument("split_square: value must be positive");
  Integer rest = value;
  Integer root = 1;
  // Trial division is fine here: scales are products of small Koszul degrees.
  for (Integer p = 2; p * p <= rest; ++p) {
    Integer pp = p * p;
    while (rest % pp == 0) {
      rest /= pp;
      root *= p;
    }
  }
  return {root, rest};
}

bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace hermk
