#pragma once

#include <map>
#include <vector>

#include "hermk/metrized.hpp"

namespace hermk {

enum class PowerKind { tensor, sym, ext };

using Word = std::vector<std::size_t>;

/// Basis words of degree k over n letters in lexicographic order:
/// all words (tensor), weakly increasing (sym), strictly increasing (ext).
std::vector<Word> power_words(PowerKind kind, std::size_t n, std::size_t k);

struct PowerSpace {
  MetrizedSpace underlying;
  std::size_t degree = 0;
  PowerKind kind = PowerKind::tensor;
  std::vector<Word> words;
  MetrizedSpace space;

  /// Position of a word in `words`; throws if absent.
  std::size_t index_of(const Word& w) const;

 private:
  friend PowerSpace make_power(const MetrizedSpace&, PowerKind, std::size_t);
  std::map<Word, std::size_t> index_;
};

PowerSpace make_power(const MetrizedSpace& v, PowerKind kind, std::size_t k);

/// Gram = k-fold Kronecker power.
PowerSpace tensor_power(const MetrizedSpace& v, std::size_t k);
/// Gram entry (I, J) = permanent of G[I, J].
PowerSpace sym_power(const MetrizedSpace& v, std::size_t k);
/// Gram entry (I, J) = determinant of G[I, J]; zero-dimensional if k > dim.
PowerSpace ext_power(const MetrizedSpace& v, std::size_t k);

/// Multiplicity of each letter 0..n-1 in a word.
std::vector<std::size_t> multiplicities(const Word& w, std::size_t n);

// Raw matrices of the canonical maps over n letters, in the word orders above.
/// ι_p(x_I) = Σ_σ x_σ(I): sym -> tensor.
Matrix iota_matrix(std::size_t n, std::size_t p);
/// j_p(x_I) = Σ_σ sgn(σ) x_σ(I): ext -> tensor.
Matrix j_matrix(std::size_t n, std::size_t p);
/// tensor -> sym, x_{i1}⊗…⊗x_{ip} ↦ x_{i1}·…·x_{ip}.
Matrix pi_matrix(std::size_t n, std::size_t p);
/// tensor -> ext, x_{i1}⊗…⊗x_{ip} ↦ x_{i1}∧…∧x_{ip}.
Matrix rho_matrix(std::size_t n, std::size_t p);

SpaceMap iota_map(const MetrizedSpace& v, std::size_t p);
SpaceMap j_map(const MetrizedSpace& v, std::size_t p);
SpaceMap pi_map(const MetrizedSpace& v, std::size_t p);
SpaceMap rho_map(const MetrizedSpace& v, std::size_t p);

}  // namespace hermk
