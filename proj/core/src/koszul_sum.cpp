#include <stdexcept>

#include "hermk/koszul.hpp"

namespace hermk {

namespace {

// Block layout of ⊕_p Tot(Ψ^p(V)^* ⊗ Ψ^{k-p}(W)^*) in one total degree.
struct SumLayout {
  std::vector<KoszulComplex> left, right;  // left[p] = Ψ^p(V), right[p] = Ψ^{k-p}(W)
  std::vector<HermitianComplex> totals;    // totals[p]
  unsigned k = 0;

  // Offset of the block (p, b) inside degree d.
  std::size_t offset(std::size_t d, unsigned p, std::size_t b) const {
    std::size_t at = 0;
    for (unsigned q = 0; q <= k; ++q)
      for (std::size_t bb = 0; bb <= k - q; ++bb) {
        if (bb > d || d - bb > q) continue;
        if (q == p && bb == b) return at;
        at += left[q].complex.objects[d - bb].dim() * right[q].complex.objects[bb].dim();
      }
    throw std::logic_error("SumLayout: block not present");
  }
};

std::size_t index_in(const PowerSpace& ps, const Word& w) { return ps.index_of(w); }

}  // namespace

bool koszul_sum_matching_is_isometry(const MetrizedSpace& sum_space, const MetrizedSpace& v,
                                     const MetrizedSpace& w, unsigned k) {
  const std::size_t n = v.dim();
  if (sum_space.dim() != n + w.dim())
    throw std::invalid_argument("koszul_sum: sum space has the wrong dimension");
  const KoszulComplex whole = koszul(sum_space, k);

  SumLayout layout;
  layout.k = k;
  for (unsigned p = 0; p <= k; ++p) {
    layout.left.push_back(koszul(v, p));
    layout.right.push_back(koszul(w, k - p));
    layout.totals.push_back(
        total_complex(koszul_product(v, p, w, k - p)));
  }

  std::vector<Matrix> matching;
  std::vector<Matrix> target_gram;
  for (unsigned d = 0; d <= k; ++d) {
    std::vector<Matrix> grams;
    for (unsigned p = 0; p <= k; ++p) grams.push_back(layout.totals[p].objects[d].gram());
    target_gram.push_back(block_diag(grams));

    const std::size_t dim = whole.complex.objects[d].dim();
    if (target_gram[d].rows() != dim) return false;
    Matrix m(dim, dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
      auto [sym_word, ext_word] = whole.basis_word(d, idx);
      Word sv, sw, xv, xw;
      for (auto l : sym_word) (l < n ? sv : sw).push_back(l < n ? l : l - n);
      for (auto l : ext_word) (l < n ? xv : xw).push_back(l < n ? l : l - n);
      const std::size_t a = sv.size(), b = sw.size();
      const unsigned p = static_cast<unsigned>(a + xv.size());
      const KoszulComplex& left = layout.left[p];
      const KoszulComplex& right = layout.right[p];
      const std::size_t left_index =
          index_in(left.sym[a], sv) * left.ext[a].words.size() + index_in(left.ext[a], xv);
      const std::size_t right_index =
          index_in(right.sym[b], sw) * right.ext[b].words.size() + index_in(right.ext[b], xw);
      const std::size_t row = layout.offset(d, p, b) +
                              left_index * right.complex.objects[b].dim() + right_index;
      m(row, idx) = (p * b) % 2 == 0 ? 1 : -1;
    }
    matching.push_back(std::move(m));
  }

  for (unsigned d = 0; d <= k; ++d) {
    if (rank(matching[d]) != matching[d].cols()) return false;
    if (matching[d].transpose() * target_gram[d] * matching[d] != whole.complex.objects[d].gram())
      return false;
  }
  for (unsigned d = 0; d < k; ++d) {
    std::vector<Matrix> blocks;
    for (unsigned p = 0; p <= k; ++p) blocks.push_back(layout.totals[p].maps[d].matrix().as_rational());
    const Matrix target_d = block_diag(blocks);
    if (matching[d + 1] * whole.complex.maps[d].matrix().as_rational() != target_d * matching[d])
      return false;
  }
  return true;
}

bool koszul_sum_isometry(const MetrizedSpace& v, const MetrizedSpace& w, unsigned k) {
  std::vector<std::string> labels = v.labels();
  for (const auto& l : w.labels()) labels.push_back(l + "'");
  const MetrizedSpace sum = MetrizedSpace::trusted(labels, block_diag(v.gram(), w.gram()));
  return koszul_sum_matching_is_isometry(sum, v, w, k);
}

}  // namespace hermk
