#include "hermk/multilinear.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermk {

namespace {

void extend_words(PowerKind kind, std::size_t n, std::size_t k, Word& prefix,
                  std::vector<Word>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  std::size_t start = 0;
  if (!prefix.empty() && kind == PowerKind::sym) start = prefix.back();
  if (!prefix.empty() && kind == PowerKind::ext) start = prefix.back() + 1;
  for (std::size_t i = start; i < n; ++i) {
    prefix.push_back(i);
    extend_words(kind, n, k, prefix, out);
    prefix.pop_back();
  }
}

std::string word_label(const MetrizedSpace& v, PowerKind kind, const Word& w) {
  if (w.empty()) return "1";
  const char* sep = kind == PowerKind::tensor ? "⊗" : kind == PowerKind::sym ? "·" : "∧";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += v.labels()[w[i]];
  }
  return s;
}

std::size_t tensor_index(const Word& w, std::size_t n) {
  std::size_t idx = 0;
  for (auto letter : w) idx = idx * n + letter;
  return idx;
}

// Sorts a copy of w and reports the parity of the sorting permutation.
// Returns sign 0 if a letter repeats.
std::pair<Word, int> sort_with_sign(const Word& w) {
  Word s = w;
  int sign = 1;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == s[i - 1]) sign = 0;
  return {std::move(s), sign};
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace

std::vector<Word> power_words(PowerKind kind, std::size_t n, std::size_t k) {
  std::vector<Word> out;
  Word prefix;
  extend_words(kind, n, k, prefix, out);
  return out;
}

std::size_t PowerSpace::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("PowerSpace::index_of: word not in basis");
  return it->second;
}

std::vector<std::size_t> multiplicities(const Word& w, std::size_t n) {
  std::vector<std::size_t> m(n, 0);
  for (auto letter : w) ++m.at(letter);
  return m;
}

PowerSpace make_power(const MetrizedSpace& v, PowerKind kind, std::size_t k) {
  PowerSpace ps;
  ps.underlying = v;
  ps.degree = k;
  ps.kind = kind;
  ps.words = power_words(kind, v.dim(), k);
  for (std::size_t i = 0; i < ps.words.size(); ++i) ps.index_[ps.words[i]] = i;

  std::vector<std::string> labels;
  for (const auto& w : ps.words) labels.push_back(word_label(v, kind, w));

  Matrix gram;
  if (kind == PowerKind::tensor) {
    gram = Matrix::identity(1);
    for (std::size_t i = 0; i < k; ++i) gram = kron(gram, v.gram());
  } else {
    const std::size_t d = ps.words.size();
    gram = Matrix(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a; b < d; ++b) {
        const Matrix minor = v.gram().select(ps.words[a], ps.words[b]);
        gram(a, b) = kind == PowerKind::sym ? permanent(minor) : determinant(minor);
        gram(b, a) = gram(a, b);
      }
  }
  ps.space = MetrizedSpace::trusted(std::move(labels), std::move(gram));
  return ps;
}

PowerSpace tensor_power(const MetrizedSpace& v, std::size_t k) {
  return make_power(v, PowerKind::tensor, k);
}
PowerSpace sym_power(const MetrizedSpace& v, std::size_t k) {
  return make_power(v, PowerKind::sym, k);
}
PowerSpace ext_power(const MetrizedSpace& v, std::size_t k) {
  return make_power(v, PowerKind::ext, k);
}

Matrix iota_matrix(std::size_t n, std::size_t p) {
  const auto sym = power_words(PowerKind::sym, n, p);
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < sym.size(); ++i) col[sym[i]] = i;
  Matrix m(ipow(n, p), sym.size());
  for (const auto& t : power_words(PowerKind::tensor, n, p)) {
    Integer weight = 1;
    for (auto c : multiplicities(t, n)) weight *= factorial(static_cast<unsigned>(c));
    m(tensor_index(t, n), col.at(sort_with_sign(t).first)) = Rational(weight);
  }
  return m;
}

Matrix j_matrix(std::size_t n, std::size_t p) {
  const auto ext = power_words(PowerKind::ext, n, p);
  std::map<Word, std::size_t> col;
  for (std::size_t i = 0; i < ext.size(); ++i) col[ext[i]] = i;
  Matrix m(ipow(n, p), ext.size());
  for (const auto& t : power_words(PowerKind::tensor, n, p)) {
    auto [sorted, sign] = sort_with_sign(t);
    if (sign != 0) m(tensor_index(t, n), col.at(sorted)) = sign;
  }
  return m;
}

Matrix pi_matrix(std::size_t n, std::size_t p) {
  const auto sym = power_words(PowerKind::sym, n, p);
  std::map<Word, std::size_t> row;
  for (std::size_t i = 0; i < sym.size(); ++i) row[sym[i]] = i;
  Matrix m(sym.size(), ipow(n, p));
  for (const auto& t : power_words(PowerKind::tensor, n, p))
    m(row.at(sort_with_sign(t).first), tensor_index(t, n)) = 1;
  return m;
}

Matrix rho_matrix(std::size_t n, std::size_t p) {
  const auto ext = power_words(PowerKind::ext, n, p);
  std::map<Word, std::size_t> row;
  for (std::size_t i = 0; i < ext.size(); ++i) row[ext[i]] = i;
  Matrix m(ext.size(), ipow(n, p));
  for (const auto& t : power_words(PowerKind::tensor, n, p)) {
    auto [sorted, sign] = sort_with_sign(t);
    if (sign != 0) m(row.at(sorted), tensor_index(t, n)) = sign;
  }
  return m;
}

SpaceMap iota_map(const MetrizedSpace& v, std::size_t p) {
  return SpaceMap(sym_power(v, p).space, tensor_power(v, p).space, iota_matrix(v.dim(), p));
}
SpaceMap j_map(const MetrizedSpace& v, std::size_t p) {
  return SpaceMap(ext_power(v, p).space, tensor_power(v, p).space, j_matrix(v.dim(), p));
}
SpaceMap pi_map(const MetrizedSpace& v, std::size_t p) {
  return SpaceMap(tensor_power(v, p).space, sym_power(v, p).space, pi_matrix(v.dim(), p));
}
SpaceMap rho_map(const MetrizedSpace& v, std::size_t p) {
  return SpaceMap(tensor_power(v, p).space, ext_power(v, p).space, rho_matrix(v.dim(), p));
}

}  // namespace hermk
