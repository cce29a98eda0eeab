#include "hermk/linalg.hpp"

#include <stdexcept>

namespace hermk {

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead_row = 0;
  Rational factor;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(lead_row, j));
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t j = c; j < cols; ++j) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      factor = m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(lead_row, j)) != 0) m(r, j) -= factor * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  // Eliminate along the shorter side.
  return m.rows() <= m.cols() ? rref(m).pivots.size() : rref(m.transpose()).pivots.size();
}

Matrix span_basis(const Matrix& columns) {
  if (columns.cols() == 0) return Matrix(columns.rows(), 0);
  RowEchelon e = rref(columns.transpose());
  Matrix out(columns.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < columns.rows(); ++r) out(r, k) = e.reduced(k, r);
  return out;
}

Matrix nullspace(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return span_basis(Matrix::from_columns(n, basis));
}

bool same_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  return span_basis(a) == span_basis(b);
}

bool span_contains(const Matrix& outer, const Matrix& inner) {
  if (inner.cols() == 0) return true;
  return rank(hstack(outer, inner)) == rank(outer);
}

Matrix span_sum(const Matrix& a, const Matrix& b) { return span_basis(hstack(a, b)); }

Matrix span_intersection(const Matrix& a, const Matrix& b) {
  // x = A u = B v  <=>  [A | -B] (u; v) = 0
  const Matrix ab = span_basis(a);
  const Matrix bb = span_basis(b);
  if (ab.cols() == 0 || bb.cols() == 0) return Matrix(a.rows(), 0);
  Matrix ns = nullspace(hstack(ab, -bb));
  Matrix u(ab.cols(), ns.cols());
  for (std::size_t r = 0; r < ab.cols(); ++r)
    for (std::size_t c = 0; c < ns.cols(); ++c) u(r, c) = ns(r, c);
  return span_basis(ab * u);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  RowEchelon e = rref(hstack(a, b));
  Matrix x(n, b.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] >= n) return std::nullopt;  // inconsistent row
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[k], j) = e.reduced(k, n + j);
  }
  return x;
}

Matrix solve_unique(const Matrix& a, const Matrix& b) {
  if (rank(a) != a.cols()) throw std::invalid_argument("solve_unique: columns are dependent");
  auto x = solve(a, b);
  if (!x) throw std::invalid_argument("solve_unique: no solution");
  return *x;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
  RowEchelon e = rref(hstack(a, Matrix::identity(a.rows())));
  const std::size_t n = a.rows();
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
    throw std::invalid_argument("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Rational determinant(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

Rational permanent(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n > 20) throw std::invalid_argument("permanent: matrix too large");
  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
  Rational total = 0;
  const unsigned long subsets = 1UL << n;
  std::vector<Rational> row_sums(n);
  for (unsigned long s = 1; s < subsets; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (s & (1UL << j)) row_sums[i] += a(i, j);
    }
    Rational prod = 1;
    for (std::size_t i = 0; i < n && sgn(prod) != 0; ++i) prod *= row_sums[i];
    const int bits = __builtin_popcountl(s);
    if (bits % 2 == 0) total += prod;
    else total -= prod;
  }
  return n % 2 == 0 ? total : Rational(-total);
}

bool is_positive_definite(const Matrix& gram) {
  if (!gram.is_symmetric()) return false;
  Matrix m = gram;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(c, c)) <= 0) return false;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return true;
}

}  // namespace hermk
