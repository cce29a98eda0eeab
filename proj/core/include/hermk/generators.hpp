#pragma once

#include <cstdint>
#include <random>

#include "hermk/cubes.hpp"
#include "hermk/homology.hpp"
#include "hermk/metrized.hpp"

namespace hermk {

std::uint64_t splitmix64(std::uint64_t x);
/// Independent seed for instance `counter` of a run seeded with `seed`.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t counter);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin(double p_true = 0.5);
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Entries uniform in [lo, hi].
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo = -2, long hi = 2);
/// Invertible matrix with small integer entries.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Gram M^T M + I with small integer M; labels prefix1..prefixN.
MetrizedSpace random_spd_space(Rng& rng, std::size_t dim, const std::string& prefix = "e");

/// 0 = E_0 ⊆ E_1 ⊆ … ⊆ E_n with randomly chosen nondecreasing dimensions and
/// E_n of dimension at most ambient.dim().
Flag random_flag(Rng& rng, const MetrizedSpace& ambient, std::size_t n);

/// Complex supported in degrees [low, high] with dims in [0, max_dim] and
/// random differentials d_{n} built from ker d_{n-1}.
ChainComplex random_complex(Rng& rng, int low, int high, std::size_t max_dim);

/// Random element of the space of chain maps a -> b (a random integer
/// combination of a basis of solutions of f d_A = d_B f).
ChainMap random_chain_map(Rng& rng, const ChainComplex& a, const ChainComplex& b);

/// Chain complex with differentials conjugated by the given invertible
/// matrices, together with the isomorphism c -> conjugate.
ChainMap random_chain_isomorphism(Rng& rng, const ChainComplex& c);

/// The projection c ⊕ cone(id_x) -> c for a random x; a quasi-isomorphism.
ChainMap add_acyclic_summand(Rng& rng, const ChainComplex& c, std::size_t max_dim);

}  // namespace hermk
