#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hermk/rational.hpp"

namespace hermk {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix. Sets of vectors are passed around as
/// matrices whose columns are the vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns);
  static Matrix column(const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector col(std::size_t c) const;
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix& operator*=(const Rational& s);
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  Vector apply(const Vector& v) const;

  bool operator==(const Matrix& rhs) const = default;

  bool is_zero() const;
  bool is_symmetric() const;

  /// Rows/columns selected by index lists, in the given order.
  Matrix select(const std::vector<std::size_t>& row_idx,
                const std::vector<std::size_t>& col_idx) const;
  Matrix select_columns(const std::vector<std::size_t>& col_idx) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);

/// Bilinear form value x^T G y.
Rational bilinear(const Matrix& gram, const Vector& x, const Vector& y);

std::string vector_label(const Vector& v);

}  // namespace hermk
