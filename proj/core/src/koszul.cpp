#include "hermk/koszul.hpp"

#include <algorithm>
#include <stdexcept>

#include "block_assembly.hpp"

namespace hermk {

bool is_complex(const HermitianComplex& c) {
  if (c.objects.empty()) return c.maps.empty();
  if (c.maps.size() + 1 != c.objects.size()) return false;
  for (std::size_t i = 0; i < c.maps.size(); ++i) {
    if (c.maps[i].domain().dim() != c.objects[i].dim()) return false;
    if (c.maps[i].codomain().dim() != c.objects[i + 1].dim()) return false;
  }
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!(c.maps[i + 1].matrix().entries() * c.maps[i].matrix().entries()).is_zero()) return false;
  return true;
}

bool is_acyclic(const HermitianComplex& c) {
  if (!is_complex(c)) return false;
  if (c.objects.empty()) return true;
  // Exactness everywhere: dim A^j = rank f^{j-1} + rank f^j.
  std::vector<std::size_t> ranks;
  for (const auto& f : c.maps) ranks.push_back(rank(f.matrix().entries()));
  for (std::size_t j = 0; j < c.objects.size(); ++j) {
    const std::size_t in = j == 0 ? 0 : ranks[j - 1];
    const std::size_t out = j < ranks.size() ? ranks[j] : 0;
    if (in + out != c.objects[j].dim()) return false;
  }
  return true;
}

HermitianComplex lambda_rescale(const HermitianComplex& c, unsigned k) {
  if (k == 0) throw std::invalid_argument("lambda_rescale: k must be positive");
  HermitianComplex out = c;
  for (auto& f : out.maps) f = f.rescaled(rat(1, k));
  return out;
}

std::pair<Word, Word> KoszulComplex::basis_word(unsigned p, std::size_t index) const {
  const std::size_t ext_dim = ext.at(p).words.size();
  return {sym.at(p).words.at(index / ext_dim), ext.at(p).words.at(index % ext_dim)};
}

KoszulComplex koszul(const MetrizedSpace& v, unsigned k) {
  KoszulComplex kc;
  kc.base = v;
  kc.k = k;
  const std::size_t n = v.dim();
  for (unsigned p = 0; p <= k; ++p) {
    kc.sym.push_back(sym_power(v, p));
    kc.ext.push_back(ext_power(v, k - p));
    kc.complex.objects.push_back(tensor_of_spaces(kc.sym[p].space, kc.ext[p].space));
  }
  for (unsigned p = 0; p < k; ++p) {
    const Matrix up = kron(iota_matrix(n, p), j_matrix(n, k - p));
    const Matrix down = kron(pi_matrix(n, p + 1), rho_matrix(n, k - p - 1));
    Matrix phi = down * up;
    phi *= Rational(1) / Rational(factorial(p) * factorial(k - p - 1));
    kc.complex.maps.emplace_back(kc.complex.objects[p], kc.complex.objects[p + 1], std::move(phi));
  }
  return kc;
}

HermitianComplex koszul_complex(const MetrizedSpace& v, unsigned k) { return koszul(v, k).complex; }

Matrix koszul_differential_explicit(std::size_t n, unsigned k, unsigned p) {
  const auto sym_from = power_words(PowerKind::sym, n, p);
  const auto ext_from = power_words(PowerKind::ext, n, k - p);
  const auto sym_to = power_words(PowerKind::sym, n, p + 1);
  const auto ext_to = power_words(PowerKind::ext, n, k - p - 1);
  std::map<Word, std::size_t> sym_index, ext_index;
  for (std::size_t i = 0; i < sym_to.size(); ++i) sym_index[sym_to[i]] = i;
  for (std::size_t i = 0; i < ext_to.size(); ++i) ext_index[ext_to[i]] = i;

  Matrix m(sym_to.size() * ext_to.size(), sym_from.size() * ext_from.size());
  for (std::size_t s = 0; s < sym_from.size(); ++s)
    for (std::size_t e = 0; e < ext_from.size(); ++e) {
      const Word& wedge = ext_from[e];
      for (std::size_t t = 0; t < wedge.size(); ++t) {
        Word grown = sym_from[s];
        grown.insert(std::upper_bound(grown.begin(), grown.end(), wedge[t]), wedge[t]);
        Word rest = wedge;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        const std::size_t row = sym_index.at(grown) * ext_to.size() + ext_index.at(rest);
        m(row, s * ext_from.size() + e) += t % 2 == 0 ? 1 : -1;
      }
    }
  return m;
}

SpaceMap koszul_section(const MetrizedSpace& v, unsigned k, unsigned p) {
  if (p >= k) throw std::invalid_argument("koszul_section: need p < k");
  const std::size_t n = v.dim();
  const MetrizedSpace from =
      tensor_of_spaces(sym_power(v, p + 1).space, ext_power(v, k - p - 1).space);
  const MetrizedSpace to = tensor_of_spaces(sym_power(v, p).space, ext_power(v, k - p).space);
  const Matrix up = kron(iota_matrix(n, p + 1), j_matrix(n, k - p - 1));
  const Matrix down = kron(pi_matrix(n, p), rho_matrix(n, k - p));
  Matrix psi = down * up;
  psi *= Rational(1) / Rational(Integer(k) * factorial(p) * factorial(k - p - 1));
  return SpaceMap(from, to, std::move(psi));
}

std::vector<SignedSequence> mu_decompose(const HermitianComplex& c) {
  if (!is_acyclic(c)) throw std::invalid_argument("mu_decompose: complex is not acyclic");
  std::vector<SignedSequence> out;
  if (c.objects.empty()) return out;
  const std::size_t len = c.length();
  std::vector<Matrix> kernels;
  for (std::size_t j = 0; j <= len; ++j)
    kernels.push_back(j < len ? kernel_basis(c.maps[j]) : Matrix::identity(c.objects[j].dim()));
  auto kernel_space = [&](std::size_t j) {
    return j == len ? c.objects[j] : induced_subspace_metric(c.objects[j], kernels[j]);
  };
  for (std::size_t j = 0; j < len; ++j) {
    ShortExactMetrized s;
    s.sub = kernel_space(j);
    s.total = c.objects[j];
    s.quot = kernel_space(j + 1);
    s.inject = SpaceMap(s.sub, s.total, kernels[j]);
    const ScaledMatrix& f = c.maps[j].matrix();
    s.project = SpaceMap(s.total, s.quot,
                         ScaledMatrix(solve_unique(kernels[j + 1], f.entries()), f.scale_sq()));
    out.push_back({j % 2 == 1 ? 1 : -1, std::move(s)});
  }
  return out;
}

KoszulNorms koszul_norms(const KoszulComplex& kc, unsigned p, const Vector& e) {
  const SpaceMap& phi = kc.complex.maps.at(p);
  const Vector image = phi.matrix().entries().apply(e);
  KoszulNorms out;
  out.inclusion_norm_sq =
      phi.matrix().scale_sq() * bilinear(kc.complex.objects[p + 1].gram(), image, image);
  // The quotient norm is the norm of the component of e orthogonal to ker φ_p.
  const MetrizedSpace& domain = kc.complex.objects[p];
  const Vector along_kernel = orthogonal_projector(domain, kernel_basis(phi)).apply(e);
  Vector w = e;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= along_kernel[i];
  out.quotient_norm_sq = bilinear(domain.gram(), w, w);
  return out;
}

Rational norm_ratio(const KoszulComplex& kc, unsigned p, const Vector& e) {
  const KoszulNorms norms = koszul_norms(kc, p, e);
  if (sgn(norms.inclusion_norm_sq) == 0)
    throw std::invalid_argument("norm_ratio: vector lies in the kernel");
  return norms.inclusion_norm_sq / norms.quotient_norm_sq;
}

Integer koszul_inclusion_norm_closed_form(unsigned k, unsigned p, const Word& sym_word,
                                          const Word& ext_word, std::size_t n) {
  const auto m = multiplicities(sym_word, n);
  Integer prod = 1;
  for (auto mi : m) prod *= factorial(static_cast<unsigned>(mi));
  Integer tail = Integer(k) - Integer(p);
  for (auto j : ext_word) tail += Integer(m[j]);
  return prod * tail;
}

void FormalObjectSum::add(const Integer& coefficient, const MetrizedSpace& object) {
  if (object.dim() == 0 || coefficient == 0) return;
  const std::string key = object.key();
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::make_pair(coefficient, object));
    return;
  }
  it->second.first += coefficient;
  if (it->second.first == 0) terms_.erase(it);
}

FormalObjectSum& FormalObjectSum::operator+=(const FormalObjectSum& rhs) {
  for (const auto& [key, term] : rhs.terms_) add(term.first, term.second);
  return *this;
}

bool FormalObjectSum::operator==(const FormalObjectSum& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  for (auto a = terms_.begin(), b = rhs.terms_.begin(); a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second.first != b->second.first) return false;
  return true;
}

Integer FormalObjectSum::rank() const {
  Integer r = 0;
  for (const auto& [key, term] : terms_) r += term.first * Integer(term.second.dim());
  return r;
}

std::vector<std::pair<Integer, MetrizedSpace>> FormalObjectSum::terms() const {
  std::vector<std::pair<Integer, MetrizedSpace>> out;
  for (const auto& [key, term] : terms_) out.push_back(term);
  return out;
}

FormalObjectSum secondary_euler(const HermitianComplex& c) {
  FormalObjectSum out;
  const long len = static_cast<long>(c.length());
  for (long p = 0; p < static_cast<long>(c.objects.size()); ++p) {
    const long coefficient = ((len - p + 1) % 2 == 0 ? 1 : -1) * (len - p);
    out.add(Integer(coefficient), c.objects[p]);
  }
  return out;
}

HermitianComplex DoubleComplex::along_first(std::size_t b) const {
  HermitianComplex c;
  for (std::size_t a = 0; a < objects.size(); ++a) c.objects.push_back(objects[a][b]);
  for (std::size_t a = 0; a < first.size(); ++a) c.maps.push_back(first[a][b]);
  return c;
}

HermitianComplex DoubleComplex::along_second(std::size_t a) const {
  HermitianComplex c;
  c.objects = objects[a];
  c.maps = second[a];
  return c;
}

DoubleComplex koszul_product(const MetrizedSpace& v, unsigned k1, const MetrizedSpace& w,
                             unsigned k2) {
  const HermitianComplex p = koszul_complex(v, k1);
  const HermitianComplex q = koszul_complex(w, k2);
  DoubleComplex b;
  b.objects.resize(k1 + 1);
  b.first.resize(k1);
  b.second.resize(k1 + 1);
  for (unsigned a = 0; a <= k1; ++a)
    for (unsigned c = 0; c <= k2; ++c) {
      b.objects[a].push_back(tensor_of_spaces(p.objects[a], q.objects[c]));
      if (a < k1)
        b.first[a].push_back(tensor_of_maps(p.maps[a], SpaceMap::identity(q.objects[c])));
      if (c < k2)
        b.second[a].push_back(tensor_of_maps(SpaceMap::identity(p.objects[a]), q.maps[c]));
    }
  return b;
}

namespace {

std::string tag(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Summand positions (a, b) of total degree s, b ascending.
std::vector<std::pair<std::size_t, std::size_t>> diagonal(const DoubleComplex& b, std::size_t s,
                                                          std::size_t from_b = 0) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = from_b; j <= std::min(s, b.second_length()); ++j)
    if (s - j <= b.first_length()) out.emplace_back(s - j, j);
  return out;
}

MetrizedSpace diagonal_sum(const DoubleComplex& b,
                           const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  std::vector<std::pair<std::string, MetrizedSpace>> summands;
  for (auto [a, j] : cells) summands.emplace_back(tag(a, j), b.objects[a][j]);
  return orthogonal_sum(summands);
}

std::vector<std::size_t> offsets(const DoubleComplex& b,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& cells) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (auto [a, j] : cells) {
    out.push_back(at);
    at += b.objects[a][j].dim();
  }
  return out;
}

}  // namespace

HermitianComplex total_complex(const DoubleComplex& b) {
  HermitianComplex tot;
  const std::size_t top = b.first_length() + b.second_length();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cells;
  for (std::size_t s = 0; s <= top; ++s) {
    cells.push_back(diagonal(b, s));
    tot.objects.push_back(diagonal_sum(b, cells[s]));
  }
  for (std::size_t s = 0; s < top; ++s) {
    const auto from_off = offsets(b, cells[s]);
    const auto to_cells = cells[s + 1];
    const auto to_off = offsets(b, to_cells);
    auto position = [&](std::size_t a, std::size_t j) {
      for (std::size_t t = 0; t < to_cells.size(); ++t)
        if (to_cells[t] == std::make_pair(a, j)) return to_off[t];
      throw std::logic_error("total_complex: missing cell");
    };
    BlockAssembler d(tot.objects[s + 1].dim(), tot.objects[s].dim());
    for (std::size_t t = 0; t < cells[s].size(); ++t) {
      auto [a, j] = cells[s][t];
      if (a < b.first_length()) d.place(position(a + 1, j), from_off[t], b.first[a][j].matrix());
      if (j < b.second_length()) {
        const ScaledMatrix& m = b.second[a][j].matrix();
        d.place(position(a, j + 1), from_off[t], a % 2 == 0 ? m : -m);
      }
    }
    tot.maps.emplace_back(tot.objects[s], tot.objects[s + 1], d.build());
  }
  return tot;
}

std::vector<SignedComplex> phi_hat_2(const DoubleComplex& b, unsigned i, unsigned k) {
  if (i == 0 || i >= k) throw std::invalid_argument("phi_hat_2: need 1 <= i <= k-1");
  if (b.first_length() != k - i || b.second_length() != i)
    throw std::invalid_argument("phi_hat_2: lengths must be (k-i, i)");
  for (std::size_t j = 0; j <= i; ++j)
    if (!is_acyclic(b.along_first(j))) throw std::invalid_argument("phi_hat_2: non-acyclic row");
  for (std::size_t j = 0; j <= k - i; ++j)
    if (!is_acyclic(b.along_second(j)))
      throw std::invalid_argument("phi_hat_2: non-acyclic column");

  std::vector<SignedComplex> out;
  const long kk = k, ii = i;
  for (long j = 0; j <= std::max(ii, kk - ii); ++j) {
    const long sign = (kk - j + 1) % 2 == 0 ? 1 : -1;
    if (j <= ii && kk - ii - j != 0)
      out.push_back({Integer(sign * (kk - ii - j)), lambda_rescale(b.along_first(j), k - i)});
    if (j <= kk - ii && ii - j != 0)
      out.push_back({Integer(sign * (ii - j)), lambda_rescale(b.along_second(j), i)});
  }
  for (std::size_t s = 1; s < k; ++s) {
    const long coefficient = ((kk - static_cast<long>(s)) % 2 == 0 ? 1 : -1) * (kk - static_cast<long>(s));
    const auto cells = diagonal(b, s);
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const auto [a, j] = cells[t];
      const auto tail = diagonal(b, s, j);
      const auto rest = diagonal(b, s, j + 1);
      HermitianComplex c;
      c.objects = {b.objects[a][j], diagonal_sum(b, tail), diagonal_sum(b, rest)};
      const std::size_t x = c.objects[0].dim(), y = c.objects[1].dim(), z = c.objects[2].dim();
      Matrix include(y, x), project(z, y);
      for (std::size_t r = 0; r < x; ++r) include(r, r) = 1;
      for (std::size_t r = 0; r < z; ++r) project(r, x + r) = 1;
      c.maps.emplace_back(c.objects[0], c.objects[1], std::move(include));
      c.maps.emplace_back(c.objects[1], c.objects[2], std::move(project));
      out.push_back({Integer(coefficient), std::move(c)});
    }
  }
  return out;
}

FormalObjectSum alternating_objects(const std::vector<SignedComplex>& family) {
  FormalObjectSum out;
  for (const auto& term : family)
    for (std::size_t r = 0; r < term.complex.objects.size(); ++r)
      out.add(r % 2 == 0 ? term.coefficient : Integer(-term.coefficient), term.complex.objects[r]);
  return out;
}

SpaceMap swap_factors(const MetrizedSpace& a, const MetrizedSpace& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  Matrix m(na * nb, na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) m(j * na + i, i * nb + j) = 1;
  return SpaceMap(tensor_of_spaces(a, b), tensor_of_spaces(b, a), std::move(m));
}

HermitianComplex transposed_koszul(const MetrizedSpace& v, unsigned k) {
  const KoszulComplex kc = koszul(v, k);
  HermitianComplex t;
  std::vector<SpaceMap> to_koszul;
  for (unsigned p = 0; p <= k; ++p) {
    to_koszul.push_back(swap_factors(kc.ext[p].space, kc.sym[p].space));
    t.objects.push_back(to_koszul.back().domain());
  }
  for (unsigned p = 0; p < k; ++p) {
    const SpaceMap back = swap_factors(kc.sym[p + 1].space, kc.ext[p + 1].space);
    t.maps.push_back(back.after(kc.complex.maps[p]).after(to_koszul[p]));
  }
  return t;
}

}  // namespace hermk
