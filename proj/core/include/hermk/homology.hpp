#pragma once

#include <map>
#include <string>
#include <vector>

#include "hermk/linalg.hpp"

namespace hermk {

/// Finite chain complex over Q, d_n : C_n -> C_{n-1}.
class ChainComplex {
 public:
  ChainComplex() = default;

  void set_dim(int n, std::size_t dim);
  /// Requires both endpoint dimensions to be set already.
  void set_differential(int n, Matrix d);

  std::size_t dim(int n) const;
  /// Zero matrix of the right shape where nothing was set.
  Matrix differential(int n) const;

  /// Smallest and largest degree with nonzero dimension (0, -1 when empty).
  int min_degree() const;
  int max_degree() const;
  bool empty() const;

  bool is_valid() const;

 private:
  std::map<int, std::size_t> dims_;
  std::map<int, Matrix> diffs_;
};

class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target) : source_(std::move(source)), target_(std::move(target)) {}

  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);
  static ChainMap identity(const ChainComplex& c);

  void set_component(int n, Matrix f);
  Matrix component(int n) const;

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }

  /// f_{n-1} d_A = d_B f_n in every degree.
  bool is_valid() const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, Matrix> comps_;
};

/// g ∘ f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// A vector-space subquotient W / R of Q^ambient with R ⊆ W, stored by
/// canonical bases.
struct Subquotient {
  std::size_t ambient = 0;
  Matrix numerator;
  Matrix denominator;

  static Subquotient make(std::size_t ambient, const Matrix& numerator, const Matrix& denominator);
  std::size_t dim() const { return numerator.cols() - denominator.cols(); }
  /// Columns of W completing a basis of R to one of W, chosen in order.
  Matrix representatives() const;
  bool contains(const Vector& v) const;
};

/// A map between subquotients given by a matrix on the ambient spaces.
struct SubquotientMap {
  Subquotient from;
  Subquotient to;
  Matrix matrix;

  /// Sends W into W' and R into R'.
  bool well_defined() const;
  /// Preimage of R' inside W, as a canonical basis.
  Matrix kernel() const;
  /// Image of W plus R', as a canonical basis.
  Matrix image() const;
  bool injective() const;
  bool surjective() const;
};

/// Exactness of from -> mid -> to at mid as the subspace equality
/// im + R = ker.
bool exact_at(const SubquotientMap& in, const SubquotientMap& out);

struct HomologyGroup {
  std::size_t dim = 0;
  Matrix representatives;  // columns in C_n
  Subquotient presentation;
};

HomologyGroup homology(const ChainComplex& c, int n);

/// s(f)_n = A_n ⊕ B_{n+1}, d(a, b) = (d_A a, f(a) - d_B b).
ChainComplex cone(const ChainMap& f);

/// σ_{>n}: degrees <= n replaced by zero.
ChainComplex truncate_above(const ChainComplex& c, int n);
/// C -> σ_{>n} C.
ChainMap truncation_projection(const ChainComplex& c, int n);

/// Ĥ_n(A, ρ) presented as H_n(s(ρ_{>n})) inside A_n ⊕ B_{n+1}.
Subquotient modified_homology(const ChainMap& f, int n);
/// The quotient {(a,b): d_A a = 0} / span{(0, d_B b'), (d_A a', ρ a')}.
Subquotient modified_homology_direct(const ChainMap& f, int n);

struct ModifiedHomologyMaps {
  SubquotientMap a;         // B̃_{n+1} -> Ĥ_n, b ↦ [(0, -b)]
  SubquotientMap zeta;      // Ĥ_n -> H_n(A), [(a,b)] ↦ [a]
  SubquotientMap rho_out;   // Ĥ_n -> ZB_n, [(a,b)] ↦ ρ(a) - d_B(b)
};

ModifiedHomologyMaps maps_a_zeta_rho(const ChainMap& f, int n);

struct SequenceCheck {
  std::string node;
  bool pass = false;
};

struct ArithlongReport {
  std::vector<SequenceCheck> checks;
  bool all_pass() const;
};

/// Exactness of
///  (a) 0 -> H_n(s(ρ)) -> Ĥ_n -> ZB_n -> H_{n-1}(s(ρ))
///  (b) H_{n+1}(A) -> B̃_{n+1} -> Ĥ_n -> H_n(A) -> 0
/// and H_n(s(ρ)) = ker ρ_out, for every n in the joint support.
ArithlongReport verify_arithlong(const ChainMap& f);

/// [(a,b)] ↦ [(f1 a, f2 b)] for a commuting square ρ' f1 = f2 ρ.
SubquotientMap induced_modified_map(const ChainMap& f1, const ChainMap& f2, const ChainMap& rho,
                                    const ChainMap& rho_prime, int n);

/// f is a quasi-isomorphism: induced maps on homology are bijective.
bool is_quasi_isomorphism(const ChainMap& f);

}  // namespace hermk
