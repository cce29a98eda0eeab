#include "hermk/scaled_matrix.hpp"

#include <stdexcept>

#include "hermk/linalg.hpp"

namespace hermk {

ScaledMatrix::ScaledMatrix(Matrix entries, Rational scale_sq)
    : entries_(std::move(entries)), scale_sq_(std::move(scale_sq)) {
  if (sgn(scale_sq_) <= 0) throw std::invalid_argument("ScaledMatrix: scale_sq must be positive");
  canonicalize();
}

void ScaledMatrix::canonicalize() {
  if (entries_.is_zero()) {
    scale_sq_ = 1;
    return;
  }
  // sqrt(a/b) = sqrt(a*b) / b, then pull square factors out of a*b.
  const Integer num = scale_sq_.get_num();
  const Integer den = scale_sq_.get_den();
  const SquareSplit split = split_square(num * den);
  const Rational factor = rat(split.square_root_part, den);
  if (factor != 1) entries_ *= factor;
  scale_sq_ = Rational(split.squarefree_part);
}

ScaledMatrix ScaledMatrix::operator*(const ScaledMatrix& rhs) const {
  return ScaledMatrix(entries_ * rhs.entries_, scale_sq_ * rhs.scale_sq_);
}

ScaledMatrix ScaledMatrix::operator+(const ScaledMatrix& rhs) const {
  if (rows() != rhs.rows() || cols() != rhs.cols())
    throw std::invalid_argument("ScaledMatrix+: shape mismatch");
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (scale_sq_ != rhs.scale_sq_)
    throw std::invalid_argument("ScaledMatrix+: incompatible irrational scales");
  return ScaledMatrix(entries_ + rhs.entries_, scale_sq_);
}

ScaledMatrix ScaledMatrix::operator-() const { return ScaledMatrix(-entries_, scale_sq_); }

ScaledMatrix ScaledMatrix::scaled_by_rational(const Rational& r) const {
  Matrix m = entries_;
  m *= r;
  return ScaledMatrix(std::move(m), scale_sq_);
}

ScaledMatrix ScaledMatrix::rescaled(const Rational& factor_sq) const {
  return ScaledMatrix(entries_, scale_sq_ * factor_sq);
}

ScaledMatrix ScaledMatrix::transpose() const { return ScaledMatrix(entries_.transpose(), scale_sq_); }

ScaledMatrix ScaledMatrix::inverse() const {
  return ScaledMatrix(hermk::inverse(entries_), 1 / scale_sq_);
}

Matrix ScaledMatrix::as_rational() const {
  if (scale_sq_ != 1) throw std::domain_error("ScaledMatrix: map has an irrational scale");
  return entries_;
}

std::string ScaledMatrix::to_string() const {
  return "sqrt(" + scale_sq_.get_str() + ")*" + entries_.to_string();
}

ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b) {
  return ScaledMatrix(kron(a.entries(), b.entries()), a.scale_sq() * b.scale_sq());
}

}  // namespace hermk
