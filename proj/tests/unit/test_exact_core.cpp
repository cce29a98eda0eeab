#include "test_util.hpp"

using namespace hermk;
using hermk::test::rng_for;
using hermk::test::space;

namespace {

// Two (matrix, scale²) pairs describe the same map iff every entry agrees
// in sign and s·m² = t·n².
bool same_map(const Matrix& m, const Rational& s, const Matrix& n, const Rational& t) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) != sgn(n(r, c))) return false;
      if (s * m(r, c) * m(r, c) != t * n(r, c) * n(r, c)) return false;
    }
  return true;
}

bool squarefree(const Integer& v) {
  for (Integer p = 2; p * p <= v; ++p)
    if (v % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST(Rational, AlwaysReduced) {
  const Rational r = rat(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(parse_rational("-10/4"), rat(-5, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(rat(3, 9)), "1/3");
}

TEST(Rational, SquareSplit) {
  const SquareSplit s = split_square(72);
  EXPECT_EQ(s.square_root_part, 6);
  EXPECT_EQ(s.squarefree_part, 2);
  EXPECT_EQ(split_square(1).squarefree_part, 1);
  EXPECT_EQ(factorial(5), 120);
}

TEST(ScaledMatrix, CanonicalForms) {
  const Matrix id = Matrix::identity(2);
  EXPECT_EQ(ScaledMatrix(id, rat(1, 4)), ScaledMatrix(rat(1, 2) * id));
  const ScaledMatrix eight(id, 8);
  EXPECT_EQ(eight.scale_sq(), 2);
  EXPECT_EQ(eight.entries(), Rational(2) * id);
  const ScaledMatrix two_thirds(id, rat(2, 3));
  EXPECT_EQ(two_thirds.scale_sq(), 6);
  EXPECT_EQ(two_thirds.entries(), rat(1, 3) * id);
  EXPECT_EQ(ScaledMatrix(Matrix(2, 2), 5).scale_sq(), 1);
  EXPECT_THROW(ScaledMatrix(id, 0), std::invalid_argument);
  EXPECT_THROW(ScaledMatrix(id, 2).as_rational(), std::domain_error);
}

TEST(ScaledMatrix, SumsNeedMatchingScales) {
  const Matrix id = Matrix::identity(1);
  EXPECT_EQ(ScaledMatrix(id, 2) + ScaledMatrix(id, 8), ScaledMatrix(Rational(3) * id, 2));
  EXPECT_THROW(ScaledMatrix(id, 2) + ScaledMatrix(id, 3), std::invalid_argument);
  EXPECT_EQ(ScaledMatrix(id, 3) + ScaledMatrix::zero(1, 1), ScaledMatrix(id, 3));
}

TEST(ScaledMatrix, ProductsAreConfluentProperty) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = rng_for(t);
    const Matrix m = random_matrix(rng, 2, 3, -4, 4);
    const Matrix n = random_matrix(rng, 3, 2, -4, 4);
    const Rational s = rat(rng.uniform(1, 50), rng.uniform(1, 50));
    const Rational u = rat(rng.uniform(1, 50), rng.uniform(1, 50));
    const ScaledMatrix product = ScaledMatrix(m, s) * ScaledMatrix(n, u);
    EXPECT_EQ(product, ScaledMatrix(m * n, s * u));
    EXPECT_TRUE(same_map(product.entries(), product.scale_sq(), m * n, s * u));
    EXPECT_EQ(product.scale_sq().get_den(), 1);
    EXPECT_TRUE(squarefree(product.scale_sq().get_num()));
  }
}

TEST(KernelBasis, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  EXPECT_EQ(kernel_basis(SpaceMap::zero(v, v)).cols(), 2u);
  EXPECT_EQ(kernel_basis(SpaceMap::identity(MetrizedSpace::orthonormal(3))).cols(), 0u);
  const MetrizedSpace line = MetrizedSpace::orthonormal(1);
  const Matrix k = kernel_basis(SpaceMap(v, line, Matrix{{1, 1}}));
  EXPECT_TRUE(same_span(k, Matrix{{1}, {-1}}));
  EXPECT_EQ(kernel_basis(SpaceMap(v, line, ScaledMatrix(Matrix{{1, 1}}, 7))), k);
}

TEST(InducedSubspaceMetric, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  EXPECT_EQ(induced_subspace_metric(v, Matrix{{1}, {0}}).gram(), (Matrix{{1}}));
  EXPECT_EQ(induced_subspace_metric(v, Matrix{{1}, {1}}).gram(), (Matrix{{2}}));
  const MetrizedSpace g = space({"a", "b"}, Matrix{{2, 1}, {1, 1}});
  EXPECT_EQ(induced_subspace_metric(g, Matrix{{1}, {0}}).gram(), (Matrix{{2}}));
  EXPECT_THROW(induced_subspace_metric(v, Matrix{{1, 2}, {1, 2}}), std::invalid_argument);
}

TEST(QuotientMetric, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  const MetrizedSpace line = MetrizedSpace::orthonormal(1);
  EXPECT_EQ(quotient_metric(SpaceMap::identity(v)).gram(), v.gram());
  EXPECT_EQ(quotient_metric(SpaceMap(v, line, Matrix{{1, 1}})).gram(), (Matrix{{rat(1, 2)}}));
  EXPECT_EQ(quotient_metric(SpaceMap(v, line, Matrix{{1, 0}})).gram(), (Matrix{{1}}));
  EXPECT_THROW(quotient_metric(SpaceMap(v, v, Matrix{{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST(IsIsometry, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  EXPECT_TRUE(is_isometry(SpaceMap::identity(v)));
  EXPECT_FALSE(is_isometry(SpaceMap(v, v, ScaledMatrix(Matrix::identity(2), rat(1, 4)))));
  EXPECT_TRUE(is_isometry(SpaceMap(v, v, Matrix{{0, 1}, {1, 0}})));
  const MetrizedSpace two = space({"a"}, Matrix{{2}});
  EXPECT_TRUE(is_isometry(SpaceMap(two, MetrizedSpace::orthonormal(1), ScaledMatrix(Matrix{{1}}, 2))));
}

TEST(OrthogonalComplement, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  EXPECT_TRUE(same_span(orthogonal_complement(v, Matrix{{1}, {0}}), Matrix{{0}, {1}}));
  const MetrizedSpace g = space({"a", "b"}, Matrix{{2, 1}, {1, 1}});
  EXPECT_TRUE(same_span(orthogonal_complement(g, Matrix{{1}, {0}}), Matrix{{1}, {-2}}));
  EXPECT_EQ(orthogonal_complement(v, Matrix::identity(2)).cols(), 0u);
}

TEST(MetrizedSpace, Validation) {
  EXPECT_THROW(space({"a", "a"}, Matrix::identity(2)), std::invalid_argument);
  EXPECT_THROW(space({"a", "b"}, Matrix{{1, 2}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(space({"a", "b"}, Matrix{{1, 0}, {1, 1}}), std::invalid_argument);
  EXPECT_EQ(MetrizedSpace().dim(), 0u);
}

TEST(OrthogonalSum, DropsZeroSummands) {
  const MetrizedSpace a = MetrizedSpace::orthonormal(1, "a");
  const MetrizedSpace b = space({"b1", "b2"}, Matrix{{2, 1}, {1, 1}});
  EXPECT_EQ(orthogonal_sum({{"x", a}, {"y", MetrizedSpace()}}), a);
  const MetrizedSpace s = orthogonal_sum({{"x", a}, {"y", b}});
  EXPECT_EQ(s.dim(), 3u);
  EXPECT_EQ(s.labels()[1], "y:b1");
  EXPECT_EQ(s.gram(), block_diag(a.gram(), b.gram()));
}

TEST(ExactCoreProperties, RandomSpdMetrics) {
  for (std::uint64_t t = 0; t < 60; ++t) {
    Rng rng = rng_for(1000 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const MetrizedSpace v = random_spd_space(rng, n);
    ASSERT_TRUE(is_positive_definite(v.gram()));

    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 4));
    const SpaceMap f(v, random_spd_space(rng, m, "w"), random_matrix(rng, m, n));
    EXPECT_EQ(kernel_basis(f).cols() + image_basis(f).cols(), n);

    const Matrix sub = span_basis(random_matrix(rng, n, static_cast<std::size_t>(rng.uniform(1, 3))));
    const MetrizedSpace induced = induced_subspace_metric(v, sub);
    EXPECT_TRUE(is_positive_definite(induced.gram()));
    const Matrix comp = orthogonal_complement(v, sub);
    EXPECT_EQ(comp.cols() + sub.cols(), n);
    EXPECT_TRUE((sub.transpose() * v.gram() * comp).is_zero());
    EXPECT_TRUE(same_span(orthogonal_complement(v, comp), sub));

    if (image_basis(f).cols() == m) {
      const MetrizedSpace q = quotient_metric(f);
      EXPECT_TRUE(is_positive_definite(q.gram()));
      // Oracle: for each target basis vector, the preimage orthogonal to
      // the kernel, found by solving [M; K^T G] x = [w; 0].
      const Matrix k = kernel_basis(f);
      const Matrix system = vstack(f.matrix().entries(), k.transpose() * v.gram());
      const Matrix rhs = vstack(Matrix::identity(m), Matrix(k.cols(), m));
      const Matrix pre = solve_unique(system, rhs);
      EXPECT_EQ(q.gram(), pre.transpose() * v.gram() * pre);
    }
    EXPECT_EQ(quotient_metric(SpaceMap::identity(v)).gram(), v.gram());
  }
}
