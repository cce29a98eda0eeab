#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermk/metrized.hpp"
#include "hermk/multilinear.hpp"

namespace hermk {

/// Bounded cochain complex: maps[i] goes from objects[i] to objects[i+1].
struct HermitianComplex {
  int first_degree = 0;
  std::vector<MetrizedSpace> objects;
  std::vector<SpaceMap> maps;

  std::size_t length() const { return maps.size(); }
};

/// Consecutive composites vanish and map shapes match the objects.
bool is_complex(const HermitianComplex& c);
/// Exact at every object, including injectivity of the first map and
/// surjectivity of the last.
bool is_acyclic(const HermitianComplex& c);

/// Every map rescaled by 1/sqrt(k).
HermitianComplex lambda_rescale(const HermitianComplex& c, unsigned k);

/// Ψ^k(V)^* with degree-p object S^pV ⊗ Λ^{k-p}V.
struct KoszulComplex {
  MetrizedSpace base;
  unsigned k = 0;
  std::vector<PowerSpace> sym;  // sym[p] = S^p V, p = 0..k
  std::vector<PowerSpace> ext;  // ext[p] = Λ^{k-p} V, p = 0..k
  HermitianComplex complex;

  /// (sym word, ext word) of the basis vector `index` of degree p.
  std::pair<Word, Word> basis_word(unsigned p, std::size_t index) const;
};

KoszulComplex koszul(const MetrizedSpace& v, unsigned k);
HermitianComplex koszul_complex(const MetrizedSpace& v, unsigned k);

/// φ_p from the term-by-term formula
///   φ_p(s ⊗ e_{j1}∧…∧e_{jr}) = Σ_t (-1)^{t-1} (s·e_{jt}) ⊗ (e_{j1}∧…ê_{jt}…∧e_{jr}),
/// independent of the ι/j/π/ρ factorisation used by koszul().
Matrix koszul_differential_explicit(std::size_t n, unsigned k, unsigned p);

/// ψ_p : degree p+1 -> degree p.
SpaceMap koszul_section(const MetrizedSpace& v, unsigned k, unsigned p);

struct SignedSequence {
  int sign = 1;
  ShortExactMetrized sequence;
};

/// One sequence per map: ker f^j ↪ A^j ↠ ker f^{j+1}, sign (-1)^{j-1}.
/// Kernels carry metrics induced from the ambient objects.
std::vector<SignedSequence> mu_decompose(const HermitianComplex& c);

struct KoszulNorms {
  Rational inclusion_norm_sq;  // ‖φ_p(e)‖² in degree p+1
  Rational quotient_norm_sq;   // quotient metric of degree p through φ_p
};

KoszulNorms koszul_norms(const KoszulComplex& kc, unsigned p, const Vector& e);
/// inclusion / quotient norm; throws if φ_p(e) = 0.
Rational norm_ratio(const KoszulComplex& kc, unsigned p, const Vector& e);
/// m_1!…m_n! (k - p + Σ_{j in J} m_j) for a basis vector with sym
/// multiplicities m and ext index set J.
Integer koszul_inclusion_norm_closed_form(unsigned k, unsigned p, const Word& sym_word,
                                          const Word& ext_word, std::size_t n);

/// Integer combination of objects keyed by literal identity. Zero-dimensional
/// objects and zero coefficients are dropped.
class FormalObjectSum {
 public:
  void add(const Integer& coefficient, const MetrizedSpace& object);
  FormalObjectSum& operator+=(const FormalObjectSum& rhs);
  bool operator==(const FormalObjectSum& rhs) const;
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Σ coefficient · dim.
  Integer rank() const;
  std::vector<std::pair<Integer, MetrizedSpace>> terms() const;

 private:
  std::map<std::string, std::pair<Integer, MetrizedSpace>> terms_;
};

/// Σ_p (-1)^{L-p+1} (L-p) [A^p] for a complex of length L.
FormalObjectSum secondary_euler(const HermitianComplex& c);

/// 2-iterated complex B^{a,b}, a = 0..first_length, b = 0..second_length,
/// with commuting differentials in both directions.
struct DoubleComplex {
  std::vector<std::vector<MetrizedSpace>> objects;  // objects[a][b]
  std::vector<std::vector<SpaceMap>> first;         // first[a][b]: (a,b) -> (a+1,b)
  std::vector<std::vector<SpaceMap>> second;        // second[a][b]: (a,b) -> (a,b+1)

  std::size_t first_length() const { return objects.size() - 1; }
  std::size_t second_length() const { return objects.front().size() - 1; }

  /// B^{*,b}: the complex along the first direction at fixed b.
  HermitianComplex along_first(std::size_t b) const;
  /// B^{a,*}: the complex along the second direction at fixed a.
  HermitianComplex along_second(std::size_t a) const;
};

/// Ψ^{k1}(V)^* ⊗ Ψ^{k2}(W)^*.
DoubleComplex koszul_product(const MetrizedSpace& v, unsigned k1, const MetrizedSpace& w,
                             unsigned k2);

/// Total complex: degree s is ⊕_{a+b=s} B^{a,b} (b ascending, tags "(a,b)"),
/// differential d_first + (-1)^a d_second.
HermitianComplex total_complex(const DoubleComplex& b);

struct SignedComplex {
  Integer coefficient;
  HermitianComplex complex;
};

/// The signed family of complexes attached to a 2-iterated acyclic complex
/// of lengths (k-i, i); zero-coefficient terms are omitted.
std::vector<SignedComplex> phi_hat_2(const DoubleComplex& b, unsigned i, unsigned k);

/// Σ coefficient · Σ_r (-1)^r [object r].
FormalObjectSum alternating_objects(const std::vector<SignedComplex>& family);

/// Degree-wise canonical basis matching
///   Ψ^k(V ⊕ W)^* ≅ ⊕_p Tot(Ψ^p(V)^* ⊗ Ψ^{k-p}(W)^*)
/// is an isometry in every degree and commutes with the differentials.
bool koszul_sum_isometry(const MetrizedSpace& v, const MetrizedSpace& w, unsigned k);
/// Same check, with the metric of the sum taken from `sum_space` (whose
/// first dim V coordinates correspond to V) instead of V ⊕ W.
bool koszul_sum_matching_is_isometry(const MetrizedSpace& sum_space, const MetrizedSpace& v,
                                     const MetrizedSpace& w, unsigned k);

/// Factor swap A ⊗ B -> B ⊗ A.
SpaceMap swap_factors(const MetrizedSpace& a, const MetrizedSpace& b);

/// Ψ^k(V)^{t*}: objects Λ^{k-p}V ⊗ S^pV, maps conjugated by factor swaps.
HermitianComplex transposed_koszul(const MetrizedSpace& v, unsigned k);

struct PsiWitness {
  std::string description;
  std::optional<ShortExactMetrized> sequence;
  std::optional<SpaceMap> isomorphism;
};

/// Witness sequences and isomorphisms for ψ^k(V) - Ψ^k(V), following the
/// recursion ψ^k = ψ^{k-1}λ^1 - ψ^{k-2}λ^2 + … + (-1)^{k-1} k λ^k.
std::vector<PsiWitness> psicomp_tree(const MetrizedSpace& v, unsigned k);
/// Sequences must be exact, isomorphisms isometries.
bool verify_witness(const PsiWitness& w);

}  // namespace hermk
