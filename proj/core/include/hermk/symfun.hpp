#pragma once

#include <map>
#include <string>
#include <vector>

#include "hermk/rational.hpp"

namespace hermk {

using Exponents = std::vector<unsigned>;

/// Polynomial with rational coefficients in a fixed number of variables.
class MonomialPoly {
 public:
  explicit MonomialPoly(std::size_t variables = 0) : vars_(variables) {}

  static MonomialPoly constant(std::size_t variables, const Rational& c);
  static MonomialPoly variable(std::size_t variables, std::size_t i);

  std::size_t variables() const { return vars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);
  MonomialPoly operator+(const MonomialPoly& rhs) const;
  MonomialPoly operator-(const MonomialPoly& rhs) const;
  MonomialPoly operator*(const MonomialPoly& rhs) const;
  MonomialPoly scaled(const Rational& c) const;
  bool operator==(const MonomialPoly& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

// Monomial definitions of the classical symmetric functions in n variables.
MonomialPoly elementary(unsigned i, std::size_t n);
MonomialPoly complete(unsigned i, std::size_t n);
MonomialPoly power_sum(unsigned i, std::size_t n);

/// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

enum class SymBasis { e, h, p };

/// Polynomial in the generators e_i, h_i or p_i; a term indexed by a
/// partition λ is the product of the generators λ_1, λ_2, ….
class SymPoly {
 public:
  explicit SymPoly(SymBasis basis = SymBasis::e) : basis_(basis) {}

  static SymPoly one(SymBasis basis);
  static SymPoly generator(SymBasis basis, unsigned i);

  SymBasis basis() const { return basis_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }

  void add_term(Partition parts, const Rational& c);
  SymPoly operator+(const SymPoly& rhs) const;
  SymPoly operator*(const SymPoly& rhs) const;
  SymPoly scaled(const Rational& c) const;
  bool operator==(const SymPoly& rhs) const = default;

  /// Expansion in n underlying variables; the canonical equality oracle.
  MonomialPoly expand(std::size_t n) const;
  std::string to_string() const;

 private:
  SymBasis basis_;
  std::map<Partition, Rational> terms_;
};

/// Rewrites p in another basis using the Newton and e/h recursions.
SymPoly change_basis(const SymPoly& p, SymBasis target);

/// Ordered tuples of positive integers summing to k: by length, then in
/// decreasing lexicographic order.
std::vector<std::vector<unsigned>> compositions(unsigned k);

/// ψ^k in the e-basis via ψ^k = ψ^{k-1}e_1 - ψ^{k-2}e_2 + … + (-1)^{k-1} k e_k.
SymPoly newton_psi(unsigned k);

/// Σ over compositions (i_1..i_l) of k of (-1)^{l+k} e_{i_1}…e_{i_l}.
SymPoly h_from_compositions(unsigned k);

/// Σ_{p=0}^{k-1} (-1)^{k-p+1} (k-p) h_p e_{k-p} == p_k in n variables.
bool koszul_euler_identity(unsigned k, std::size_t n);

/// Finitely supported degree -> coefficient map; the product adds degrees.
template <typename C>
class Graded {
 public:
  const std::map<unsigned, C>& parts() const { return parts_; }

  void add(unsigned degree, const C& c) {
    auto it = parts_.find(degree);
    if (it == parts_.end()) {
      if (!coefficient_is_zero(c)) parts_.emplace(degree, c);
      return;
    }
    it->second = it->second + c;
    if (coefficient_is_zero(it->second)) parts_.erase(it);
  }

  Graded operator+(const Graded& rhs) const {
    Graded out = *this;
    for (const auto& [d, c] : rhs.parts_) out.add(d, c);
    return out;
  }

  Graded operator*(const Graded& rhs) const {
    Graded out;
    for (const auto& [d1, c1] : parts_)
      for (const auto& [d2, c2] : rhs.parts_) out.add(d1 + d2, c1 * c2);
    return out;
  }

  bool operator==(const Graded& rhs) const = default;

 private:
  static bool coefficient_is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool coefficient_is_zero(const MonomialPoly& c) { return c.is_zero(); }

  std::map<unsigned, C> parts_;
};

using GradedElement = Graded<Rational>;

namespace detail {
inline Rational scale_coefficient(const Rational& c, const Rational& s) { return c * s; }
inline MonomialPoly scale_coefficient(const MonomialPoly& c, const Rational& s) { return c.scaled(s); }
}  // namespace detail

/// Multiplies the degree-p part by k^p.
template <typename C>
Graded<C> graded_adams(const Graded<C>& x, unsigned k) {
  Graded<C> out;
  for (const auto& [p, c] : x.parts()) {
    Integer factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), k, p);
    out.add(p, detail::scale_coefficient(c, Rational(factor)));
  }
  return out;
}

/// Formal roots x_1..x_r, each multiplied by root_scale, truncated at
/// degree `truncation`.
struct ChernRootBundle {
  std::size_t roots = 1;
  unsigned truncation = 2;
  Rational root_scale = 1;
};

/// Σ_{m <= D} p_m / m! with p_m the power sum of the (scaled) roots and
/// p_0 the number of roots.
Graded<MonomialPoly> formal_ch(const ChernRootBundle& b);

/// graded_adams(formal_ch(b), k) == formal_ch(b with roots scaled by k).
bool check_gs(const ChernRootBundle& b, unsigned k);

}  // namespace hermk
