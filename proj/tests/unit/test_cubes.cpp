#include "hermk/cubes.hpp"
#include "hermk/koszul.hpp"
#include "test_util.hpp"

using namespace hermk;
using hermk::test::rng_for;
using hermk::test::space;

namespace {

// 0 ⊆ span(e_1) ⊆ span(e_1, e_2) ⊆ … in the given ambient.
Flag standard_flag(const MetrizedSpace& ambient, std::vector<std::size_t> dims) {
  std::vector<Matrix> chain{Matrix(ambient.dim(), 0)};
  for (std::size_t d : dims) {
    std::vector<std::size_t> cols(d);
    for (std::size_t c = 0; c < d; ++c) cols[c] = c;
    chain.push_back(Matrix::identity(ambient.dim()).select_columns(cols));
  }
  return Flag::make(ambient, chain);
}

MetrizedSpace ambient6(Rng& rng) { return random_spd_space(rng, 6, "x"); }

// Random flag whose dimensions strictly increase, so no vertex is forced
// to vanish.
Flag strict_flag(Rng& rng, const MetrizedSpace& ambient, std::size_t n) {
  while (true) {
    Flag f = random_flag(rng, ambient, n);
    bool strict = true;
    for (std::size_t i = 0; i < n; ++i) strict = strict && f.chain[i].cols() < f.chain[i + 1].cols();
    if (strict) return f;
  }
}

CubeSum signed_faces(const Flag& f, int sign) {
  CubeSum out;
  for (std::size_t i = 0; i <= f.length(); ++i) out.add(cub(f.face(i)), Integer(sign * (i % 2 == 0 ? 1 : -1)));
  return out;
}

}  // namespace

TEST(CubeFaces, LineCube) {
  const MetrizedSpace a = MetrizedSpace::orthonormal(1, "a");
  const MetrizedSpace b = MetrizedSpace::orthonormal(2, "b");
  const MetrizedSpace c = MetrizedSpace::orthonormal(1, "c");
  const Cube line = line_cube(SpaceMap(a, b, Matrix{{1}, {0}}), SpaceMap(b, c, Matrix{{0, 1}}));
  EXPECT_TRUE(is_valid_cube(line));
  EXPECT_EQ(face(line, 1, 0), point_cube(a));
  EXPECT_EQ(face(line, 1, 1), point_cube(b));
  EXPECT_EQ(face(line, 1, 2), point_cube(c));
  EXPECT_THROW(face(line, 2, 0), std::invalid_argument);

  CubeSum expected;
  expected.add(point_cube(a), -1);
  expected.add(point_cube(b), 1);
  expected.add(point_cube(c), -1);
  EXPECT_TRUE((cube_differential(line) - expected).is_zero());
}

TEST(CubeFaces, InvalidLineCubeIsRejected) {
  const MetrizedSpace a = MetrizedSpace::orthonormal(1, "a");
  const MetrizedSpace b = MetrizedSpace::orthonormal(2, "b");
  const MetrizedSpace c = MetrizedSpace::orthonormal(1, "c");
  EXPECT_FALSE(is_valid_cube(line_cube(SpaceMap(a, b, Matrix{{1}, {0}}), SpaceMap(b, c, Matrix{{1, 0}}))));
}

TEST(CubeFaces, CubicalIdentityProperty) {
  for (std::uint64_t t = 0; t < 6; ++t) {
    Rng rng = rng_for(t);
    const Cube c = cub(random_flag(rng, ambient6(rng), 4));
    ASSERT_EQ(c.dimension(), 3u);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = i + 1; j <= 3; ++j)
        for (unsigned k = 0; k < 3; ++k)
          for (unsigned l = 0; l < 3; ++l)
            EXPECT_EQ(face(face(c, j, l), i, k), face(face(c, i, k), j - 1, l));
  }
}

TEST(Degeneracy, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  const Cube p = point_cube(v);
  const Cube s0 = degeneracy(p, 1, 0);
  EXPECT_EQ(s0, line_cube(SpaceMap::identity(v), SpaceMap::zero(v, MetrizedSpace())));
  const Cube s1 = degeneracy(p, 1, 1);
  EXPECT_EQ(s1, line_cube(SpaceMap::zero(MetrizedSpace(), v), SpaceMap::identity(v)));
  EXPECT_TRUE(is_valid_cube(s0));
  EXPECT_TRUE(is_valid_cube(s1));
  EXPECT_TRUE(is_degenerate(s0));
  EXPECT_TRUE(is_degenerate(s1));

  Rng rng = rng_for(10);
  const Cube c = cub(random_flag(rng, ambient6(rng), 3));
  for (std::size_t i = 1; i <= 3; ++i) {
    EXPECT_EQ(face(degeneracy(c, i, 0), i, 0), c);
    EXPECT_EQ(face(degeneracy(c, i, 0), i, 1), c);
    EXPECT_TRUE(face(degeneracy(c, i, 0), i, 2).is_zero());
    EXPECT_EQ(face(degeneracy(c, i, 1), i, 2), c);
    EXPECT_TRUE(face(degeneracy(c, i, 1), i, 0).is_zero());
  }
}

TEST(CubeDifferential, SquaresToZeroProperty) {
  for (std::uint64_t t = 0; t < 8; ++t) {
    Rng rng = rng_for(20 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
    const Cube c = cub(random_flag(rng, ambient6(rng), n));
    EXPECT_TRUE(cube_differential(cube_differential(c)).is_zero()) << n;
  }
}

TEST(CubeDifferential, DegenerateStabilityProperty) {
  for (std::uint64_t t = 0; t < 8; ++t) {
    Rng rng = rng_for(30 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Cube c = cub(random_flag(rng, ambient6(rng), n));
    for (std::size_t i = 1; i <= c.dimension() + 1; ++i)
      for (unsigned kind = 0; kind < 2; ++kind)
        EXPECT_TRUE(cube_differential(degeneracy(c, i, kind)).is_degenerate());
  }
}

TEST(Cub, LengthOneAndTwo) {
  const MetrizedSpace amb = MetrizedSpace::orthonormal(3);
  const Flag one = standard_flag(amb, {2});
  const Cube p = cub(one);
  EXPECT_EQ(p.dimension(), 0u);
  EXPECT_EQ(p.vertex(0).dim(), 2u);

  const Flag two = standard_flag(amb, {1, 3});
  const Cube line = cub(two);
  ASSERT_EQ(line.dimension(), 1u);
  EXPECT_EQ(line.vertex(0).dim(), 1u);
  EXPECT_EQ(line.vertex(1).dim(), 3u);
  EXPECT_EQ(line.vertex(2).dim(), 2u);
  EXPECT_EQ(line.vertex(2), flag_quotient(two, 1, 2));
  EXPECT_TRUE(is_valid_cube(line));
  EXPECT_THROW(cub(Flag::make(amb, {Matrix(3, 0)})), std::invalid_argument);
}

TEST(Cub, TopRowOfTwoCubeIsQuotientFlag) {
  Rng rng = rng_for(40);
  const MetrizedSpace amb = random_spd_space(rng, 4);
  const Flag f = standard_flag(amb, {1, 2, 4});
  const Cube c = cub(f);
  ASSERT_EQ(c.dimension(), 2u);
  EXPECT_TRUE(is_valid_cube(c));
  EXPECT_EQ(c.vertex(CubeIndex{2, 0}), flag_quotient(f, 1, 2));
  EXPECT_EQ(c.vertex(CubeIndex{2, 1}), flag_quotient(f, 1, 3));
  EXPECT_EQ(c.vertex(CubeIndex{2, 2}), flag_quotient(f, 2, 3));
  EXPECT_EQ(face(c, 1, 2), cub(f.face(0)));
  EXPECT_EQ(face(c, 1, 1), cub(f.face(1)));
}

TEST(Cub, FaceAndDegeneracyRelationsProperty) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    Rng rng = rng_for(50 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    const Flag f = random_flag(rng, ambient6(rng), n);
    EXPECT_TRUE(is_valid_cube(cub(f)));
    for (const auto& check : face_relations(f)) EXPECT_TRUE(check.pass) << check.name;
    for (const auto& check : degeneracy_relations(f)) EXPECT_TRUE(check.pass) << check.name;
    EXPECT_TRUE(verify_canonical_kernel_rebuild(cub(f)));
  }
}

TEST(Cub, ChainPropertyWithNegativeControl) {
  for (std::uint64_t t = 0; t < 8; ++t) {
    Rng rng = rng_for(60 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const Flag f = strict_flag(rng, ambient6(rng), n);
    EXPECT_TRUE(cub_chain_property(f));
    EXPECT_TRUE((cube_differential(cub(f)) + signed_faces(f, 1)).is_degenerate());
    // With the opposite sign on the face sum the nondegenerate terms double up.
    EXPECT_FALSE((cube_differential(cub(f)) - signed_faces(f, 1)).is_degenerate());
  }
}

TEST(Normalized, Examples) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(1);
  Cube top(2);
  top.set_vertex(top.index_of({2, 2}), v);
  EXPECT_TRUE(is_normalized(top));
  EXPECT_FALSE(is_normalized(degeneracy(point_cube(v), 1, 0)));
  EXPECT_FALSE(is_normalized(cub(standard_flag(MetrizedSpace::orthonormal(3), {1, 2, 3}))));
}

TEST(Cubsdeg, IdentityAndPairedFaces) {
  for (std::uint64_t t = 0; t < 6; ++t) {
    Rng rng = rng_for(70 + t);
    const MetrizedSpace amb = t < 3 ? random_spd_space(rng, 4) : ambient6(rng);
    for (std::size_t n = 2; n <= 3; ++n) {
      const Flag f = random_flag(rng, amb, n);
      for (std::size_t i = 1; i < n; ++i) {
        EXPECT_TRUE(cubsdeg_identity(f, i)) << n << " " << i;
        const Cube c = cub(f.degeneracy(i));
        for (unsigned l = 0; l < 3; ++l) EXPECT_EQ(face(c, i, l), face(c, i + 1, l));
        EXPECT_TRUE(tau_symmetric(c, i));
      }
    }
  }
}

TEST(Homotopy, Examples) {
  Rng rng = rng_for(80);
  const MetrizedSpace amb = ambient6(rng);
  EXPECT_TRUE(homotopy_check(strict_flag(rng, amb, 2), 1));
  const Flag three = strict_flag(rng, amb, 3);
  EXPECT_TRUE(homotopy_check(three, 1));
  EXPECT_TRUE(homotopy_check(three, 2));
  const Flag zero = Flag::make(amb, {Matrix(6, 0), Matrix(6, 0), Matrix(6, 0)});
  EXPECT_TRUE(homotopy_check(zero, 1));
  EXPECT_THROW(homotopy_check(three, 3), std::invalid_argument);
}

TEST(Homotopy, ReconstructFlagRoundTrip) {
  Rng rng = rng_for(90);
  const MetrizedSpace amb = ambient6(rng);
  const Flag f = strict_flag(rng, amb, 3);
  const auto g = reconstruct_flag(cub(f), amb);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(cub(*g), cub(f));
  EXPECT_FALSE(reconstruct_flag(degeneracy(point_cube(MetrizedSpace::orthonormal(1)), 1, 0), amb));
}

TEST(DirectSumCube, Examples) {
  const MetrizedSpace a = space({"a"}, Matrix{{2}});
  const MetrizedSpace c = MetrizedSpace::orthonormal(2, "c");
  const Cube line = direct_sum_cube({a, c});
  ASSERT_EQ(line.dimension(), 1u);
  EXPECT_EQ(line.vertex(0), a);
  EXPECT_EQ(line.vertex(2), c);
  EXPECT_EQ(line.vertex(1).dim(), 3u);
  EXPECT_EQ(line.vertex(1).gram(), block_diag(a.gram(), c.gram()));
  EXPECT_TRUE(is_valid_cube(line));
  EXPECT_TRUE(is_split_cube(line));

  const Cube square = direct_sum_cube({a, MetrizedSpace(), c, a});
  EXPECT_EQ(square.dimension(), 2u);
  EXPECT_TRUE(is_valid_cube(square));
  EXPECT_TRUE(is_split_cube(square));

  EXPECT_TRUE(direct_sum_cube({MetrizedSpace(), MetrizedSpace()}).is_zero());
  EXPECT_THROW(direct_sum_cube({a, c, a}), std::invalid_argument);
}

TEST(SplitCube, SpIsSplitProperty) {
  for (std::uint64_t t = 0; t < 10; ++t) {
    Rng rng = rng_for(100 + t);
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<MetrizedSpace> corners;
    for (std::size_t i = 0; i < (1u << n); ++i)
      corners.push_back(random_spd_space(rng, static_cast<std::size_t>(rng.uniform(0, 2)),
                                         "c" + std::to_string(i) + "_"));
    const Cube sp = direct_sum_cube(corners);
    EXPECT_TRUE(is_valid_cube(sp));
    EXPECT_TRUE(is_split_cube(sp));
    EXPECT_TRUE(verify_canonical_kernel_rebuild(sp));
  }
}

TEST(SplitCube, NonOrthogonalExtensionIsNotSplit) {
  const MetrizedSpace a = MetrizedSpace::orthonormal(1, "a");
  const MetrizedSpace c = MetrizedSpace::orthonormal(1, "c");
  const MetrizedSpace b = space({"b1", "b2"}, Matrix{{2, 1}, {1, 1}});
  const Cube line = line_cube(SpaceMap(a, b, Matrix{{1}, {0}}), SpaceMap(b, c, Matrix{{0, 1}}));
  EXPECT_TRUE(is_valid_cube(line));
  EXPECT_FALSE(is_split_cube(line));
}

TEST(SplitCube, KoszulPieces) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(2);
  for (const auto& s : mu_decompose(lambda_rescale(koszul_complex(v, 2), 2)))
    EXPECT_TRUE(is_split_cube(line_cube(s.sequence.inject, s.sequence.project)));
  const auto raw = mu_decompose(koszul_complex(v, 2));
  EXPECT_FALSE(is_split_cube(line_cube(raw[1].sequence.inject, raw[1].sequence.project)));
}

TEST(Tau, Examples) {
  const Flag f = standard_flag(MetrizedSpace::orthonormal(4), {1, 2, 4});
  const Cube generic = cub(f);
  EXPECT_FALSE(tau_symmetric(generic, 1));
  EXPECT_EQ(tau(tau(generic, 1), 1), generic);
  EXPECT_TRUE(tau_symmetric(cub(f.degeneracy(1)), 1));
  EXPECT_TRUE(tau_symmetric(cub(f.degeneracy(2)), 2));
  EXPECT_THROW(tau(cub(standard_flag(MetrizedSpace::orthonormal(2), {1, 2})), 1), std::invalid_argument);
}

TEST(CanonicalKernelRebuild, InclusionsAreLiteral) {
  Rng rng = rng_for(110);
  const Cube c = cub(strict_flag(rng, ambient6(rng), 3));
  const CanonicalKernelRebuild r = canonical_kernel_rebuild(c);
  EXPECT_TRUE(is_valid_cube(r.rebuilt));
  ASSERT_EQ(r.isomorphisms.size(), c.vertex_count());
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= c.dimension(); ++dir) {
      if (j[dir - 1] != 0 || r.rebuilt.vertex(idx).dim() == 0) continue;
      const std::size_t t = c.neighbor(idx, dir);
      // Arrow times source basis equals the source basis read in the target.
      EXPECT_TRUE(span_contains(r.bases[t], r.bases[idx]));
    }
  }
  EXPECT_TRUE(verify_canonical_kernel_rebuild(c));
}
