#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermk/metrized.hpp"

namespace hermk {

using CubeIndex = std::vector<unsigned>;  // digits j_1..j_n in {0,1,2}

/// An n-cube of metrized spaces: a vertex per index in {0,1,2}^n and an
/// arrow per vertex and direction i with j_i in {0,1}, going to j + e_i.
/// Directions are 1-based in the public API, matching the face notation.
///
/// Each vertex may carry a frame: the coordinates of its basis in some
/// ambient space. Frames are bookkeeping for cubes built from flags and
/// take no part in equality.
class Cube {
 public:
  /// The zero cube of dimension n.
  explicit Cube(std::size_t n = 0);

  std::size_t dimension() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::size_t index_of(const CubeIndex& j) const;
  CubeIndex digits(std::size_t index) const;

  const MetrizedSpace& vertex(std::size_t index) const { return vertices_.at(index); }
  const MetrizedSpace& vertex(const CubeIndex& j) const { return vertex(index_of(j)); }
  const std::optional<Matrix>& frame(std::size_t index) const { return frames_.at(index); }
  void set_vertex(std::size_t index, MetrizedSpace v, std::optional<Matrix> frame = std::nullopt);

  /// Arrow out of `index` in direction `dir` (1-based); digit must be 0 or 1.
  const ScaledMatrix& arrow(std::size_t index, std::size_t dir) const;
  void set_arrow(std::size_t index, std::size_t dir, ScaledMatrix m);
  std::size_t neighbor(std::size_t index, std::size_t dir) const;

  bool is_zero() const;
  /// Canonical serialization of vertices and arrows.
  const std::string& key() const;
  bool operator==(const Cube& rhs) const { return key() == rhs.key(); }

 private:
  std::size_t n_;
  std::vector<MetrizedSpace> vertices_;
  std::vector<std::optional<Matrix>> frames_;
  std::vector<ScaledMatrix> arrows_;  // arrows_[index * n + dir - 1]
  mutable std::optional<std::string> key_;
};

/// The 0-cube with the given vertex.
Cube point_cube(const MetrizedSpace& v, std::optional<Matrix> frame = std::nullopt);
/// The 1-cube a -> b -> c.
Cube line_cube(const SpaceMap& f, const SpaceMap& g);

/// ∂_i^k: fixes coordinate i (1-based) to k.
Cube face(const Cube& c, std::size_t i, unsigned k);
/// s_i^0 inserts a direction (X = X -> 0) at position i, s_i^1 inserts
/// (0 -> X = X); 1 <= i <= n+1.
Cube degeneracy(const Cube& c, std::size_t i, unsigned kind);
/// Swaps directions i and i+1.
Cube tau(const Cube& c, std::size_t i);
bool tau_symmetric(const Cube& c, std::size_t i);

/// Every direction triple is short exact and every square commutes.
bool is_valid_cube(const Cube& c);
/// c = s_i^0 ∂_i^1 c or c = s_i^1 ∂_i^1 c for some i.
bool is_degenerate(const Cube& c);
/// All ∂_i^0 and ∂_i^1 faces are zero cubes.
bool is_normalized(const Cube& c);

/// Formal integer combination of cubes keyed by their canonical form.
class CubeSum {
 public:
  CubeSum() = default;
  explicit CubeSum(const Cube& c, const Integer& coefficient = 1) { add(c, coefficient); }

  void add(const Cube& c, const Integer& coefficient);
  CubeSum& operator+=(const CubeSum& rhs);
  CubeSum operator+(const CubeSum& rhs) const;
  CubeSum operator-(const CubeSum& rhs) const;
  CubeSum scaled(const Integer& k) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::vector<std::pair<Integer, Cube>> terms() const;
  /// Drops every term for which `discard` returns true.
  CubeSum filtered(const std::function<bool(const Cube&)>& discard) const;
  /// True iff every term is degenerate.
  bool is_degenerate() const;

 private:
  std::map<std::string, std::pair<Integer, Cube>> terms_;
};

/// d = Σ_i (-1)^i (∂_i^0 - ∂_i^1 + ∂_i^2).
CubeSum cube_differential(const Cube& c);
CubeSum cube_differential(const CubeSum& x);

/// A chain E_0 ⊆ E_1 ⊆ … ⊆ E_n of subspaces of a metrized ambient space,
/// each stored as a canonical basis. Vertex spaces of Cub are the
/// orthogonal complements E_b ⊖ E_a.
struct Flag {
  MetrizedSpace ambient;
  std::vector<Matrix> chain;

  /// Canonicalizes the bases and checks the containments.
  static Flag make(const MetrizedSpace& ambient, const std::vector<Matrix>& chain);

  std::size_t length() const { return chain.size() - 1; }
  /// ∂_j drops E_j, 0 <= j <= n.
  Flag face(std::size_t j) const;
  /// s_j repeats E_j, 0 <= j <= n.
  Flag degeneracy(std::size_t j) const;
};

/// E_b ⊖ E_a with the induced metric; labels are ambient coordinates.
MetrizedSpace flag_quotient(const Flag& f, std::size_t a, std::size_t b);

/// The (n-1)-cube attached to a flag of length n >= 1.
Cube cub(const Flag& f);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

/// ∂_i^0, ∂_i^1, ∂_i^2 of Cub(F) against the degenerate extensions of Cub of
/// the truncated flags, for i = 1..n-1.
std::vector<NamedCheck> face_relations(const Flag& f);
/// Cub(s_0 F) = s_1^1 Cub F, Cub(s_n F) = s_n^0 Cub F and τ_i-symmetry of
/// Cub(s_i F).
std::vector<NamedCheck> degeneracy_relations(const Flag& f);

/// d Cub(F) + Σ_i (-1)^i Cub(∂_i F) is a sum of degenerate cubes (n >= 2).
bool cub_chain_property(const Flag& f);

/// d Cub(s_i F) equals
///   Σ_{j<i} (-1)^{j+1} Cub(s_{i-1} ∂_j F) + Σ_{j>i} (-1)^j Cub(s_i ∂_j F)
/// modulo degenerate cubes; 1 <= i <= n-1.
bool cubsdeg_identity(const Flag& f, std::size_t i);

/// Recovers the flag (0 ⊆ G_1 ⊆ … ⊆ G_m) whose Cub is c, using vertex
/// frames; nullopt when c is not of that form.
std::optional<Flag> reconstruct_flag(const Cube& c, const MetrizedSpace& ambient);

/// With h(Cub(s_i E)) = (-1)^{i+1} Cub(s_i s_i E): d h + h d - id vanishes on
/// Cub(s_i F) modulo degenerate cubes and cubes Cub(s_j E'), j < i.
bool homotopy_check(const Flag& f, std::size_t i);

/// Cube with vertex ⊕^⊥ over the corners obtained by replacing each 1 in j
/// by 0 or 2. Corners are indexed by {0,2}^n in lexicographic order.
Cube direct_sum_cube(const std::vector<MetrizedSpace>& corners);

/// Builds the canonical map from direct_sum_cube(corners of c) to c
/// (inclusions along 0->1, orthogonal lifts along 2->1) and checks that it
/// is an isometry at every vertex commuting with all arrows.
bool is_split_cube(const Cube& c);

/// Replaces each vertex by its image in the vertex obtained by turning all
/// 0 digits into 1, with the induced metric, and transports the arrows.
struct CanonicalKernelRebuild {
  Cube rebuilt;
  std::vector<ScaledMatrix> isomorphisms;  // per vertex, original -> rebuilt
  std::vector<Matrix> bases;               // per vertex, inside the 0->1 target
};
CanonicalKernelRebuild canonical_kernel_rebuild(const Cube& c);
/// The rebuilt cube is valid, its 0->1 arrows are literal subspace
/// inclusions, and the vertex isomorphisms commute with all arrows.
bool verify_canonical_kernel_rebuild(const Cube& c);

}  // namespace hermk
