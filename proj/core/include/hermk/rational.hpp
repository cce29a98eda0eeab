#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hermk {

/// Exact rational scalar. Arithmetic results of mpq_class are always
/// canonical (reduced, positive denominator); values built from a
/// numerator/denominator pair must go through `rat`.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long numerator, long denominator = 1);
Rational rat(const Integer& numerator, const Integer& denominator);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

Integer factorial(unsigned n);

/// Splits a positive integer as square_part^2 * squarefree_part.
struct SquareSplit {
  Integer square_root_part;
  Integer squarefree_part;
};
SquareSplit split_square(const Integer& value);

bool is_zero(const Rational& value);

}  // namespace hermk
