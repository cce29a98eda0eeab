#pragma once

#include "hermk/matrix.hpp"

namespace hermk {

/// The linear map sqrt(scale_sq) * entries.
///
/// Canonical form: scale_sq is a squarefree positive integer and any
/// rational square factor has been absorbed into `entries`; the zero matrix
/// carries scale_sq = 1. Two ScaledMatrix values describe the same map iff
/// their canonical forms are equal, which is what operator== compares.
class ScaledMatrix {
 public:
  ScaledMatrix() : scale_sq_(1) {}
  explicit ScaledMatrix(Matrix entries, Rational scale_sq = 1);

  static ScaledMatrix identity(std::size_t n) { return ScaledMatrix(Matrix::identity(n)); }
  static ScaledMatrix zero(std::size_t rows, std::size_t cols) {
    return ScaledMatrix(Matrix::zero(rows, cols));
  }

  const Matrix& entries() const { return entries_; }
  const Rational& scale_sq() const { return scale_sq_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }

  ScaledMatrix operator*(const ScaledMatrix& rhs) const;
  /// Sum of maps with equal canonical scale; throws when the scales differ
  /// and neither side is zero (the result would leave Q(sqrt s)).
  ScaledMatrix operator+(const ScaledMatrix& rhs) const;
  ScaledMatrix operator-() const;
  ScaledMatrix scaled_by_rational(const Rational& r) const;
  /// Multiplies the map by sqrt(factor_sq).
  ScaledMatrix rescaled(const Rational& factor_sq) const;
  ScaledMatrix transpose() const;
  ScaledMatrix inverse() const;

  /// Rational matrix equal to this map; throws if the scale is irrational.
  Matrix as_rational() const;
  bool is_zero() const { return entries_.is_zero(); }

  bool operator==(const ScaledMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  void canonicalize();

  Matrix entries_;
  Rational scale_sq_;
};

ScaledMatrix kron(const ScaledMatrix& a, const ScaledMatrix& b);

}  // namespace hermk
