#include <functional>
#include <string>

#include "hermk/koszul.hpp"

namespace hermk {

std::vector<PsiWitness> psicomp_tree(const MetrizedSpace& v, unsigned k) {
  std::vector<PsiWitness> out;
  if (k <= 1) return out;

  for (unsigned p = 0; p < k; ++p) {
    const MetrizedSpace ext = ext_power(v, k - p).space;
    const MetrizedSpace sym = sym_power(v, p).space;
    out.push_back({"swap Λ^" + std::to_string(k - p) + "⊗S^" + std::to_string(p), std::nullopt,
                   swap_factors(ext, sym)});
  }

  // Expansion of S^m ⊗ prefix, where prefix is a tensor product of
  // exterior powers accumulated along the recursion.
  std::function<void(unsigned, const std::optional<MetrizedSpace>&, const std::string&)> expand =
      [&](unsigned m, const std::optional<MetrizedSpace>& prefix, const std::string& name) {
        if (m < 2) return;
        const auto sequences = mu_decompose(transposed_koszul(v, m));
        for (std::size_t p = 0; p < sequences.size(); ++p) {
          const ShortExactMetrized& s = sequences[p].sequence;
          out.push_back({"μ^" + std::to_string(p) + "(Ψ^" + std::to_string(m) + "t*)" + name,
                         prefix ? tensor_sequence(s, *prefix) : s, std::nullopt});
        }
        for (unsigned i = 1; i <= m; ++i) {
          const MetrizedSpace wedge = ext_power(v, i).space;
          const MetrizedSpace next = prefix ? tensor_of_spaces(*prefix, wedge) : wedge;
          expand(m - i, next, name + "⊗Λ^" + std::to_string(i));
        }
      };
  expand(k, std::nullopt, "");
  return out;
}

bool verify_witness(const PsiWitness& w) {
  if (w.sequence && !is_exact(*w.sequence)) return false;
  if (w.isomorphism && !is_isometry(*w.isomorphism)) return false;
  return w.sequence.has_value() || w.isomorphism.has_value();
}

}  // namespace hermk
