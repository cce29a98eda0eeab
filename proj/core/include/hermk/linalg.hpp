#pragma once

#include <optional>
#include <vector>

#include "hermk/matrix.hpp"

namespace hermk {

struct RowEchelon {
  Matrix reduced;                    // reduced row-echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination over Q.
RowEchelon rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical basis of the column span: the nonzero rows of rref(m^T),
/// returned as columns. Two matrices span the same space iff their
/// canonical bases are equal.
Matrix span_basis(const Matrix& columns);

/// Canonical basis (see span_basis) of { x : m x = 0 }.
Matrix nullspace(const Matrix& m);

bool same_span(const Matrix& a, const Matrix& b);
/// True iff every column of `inner` lies in the column span of `outer`.
bool span_contains(const Matrix& outer, const Matrix& inner);

Matrix span_sum(const Matrix& a, const Matrix& b);
Matrix span_intersection(const Matrix& a, const Matrix& b);

/// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Unique X with a X = b where a has independent columns; throws otherwise.
Matrix solve_unique(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);
Rational determinant(const Matrix& a);

/// Permanent by Ryser's inclusion-exclusion formula, O(2^k k^2) for a k x k
/// matrix. Intended for k <= 6.
Rational permanent(const Matrix& a);

/// Sylvester test by symmetric elimination: all pivots strictly positive.
bool is_positive_definite(const Matrix& gram);

}  // namespace hermk
