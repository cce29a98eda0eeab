#include <map>
#include <stdexcept>

#include "hermk/cubes.hpp"

namespace hermk {

Flag Flag::make(const MetrizedSpace& ambient, const std::vector<Matrix>& chain) {
  if (chain.empty()) throw std::invalid_argument("Flag::make: empty chain");
  Flag f{ambient, {}};
  for (const auto& m : chain) {
    if (m.rows() != ambient.dim()) throw std::invalid_argument("Flag::make: wrong ambient dimension");
    f.chain.push_back(span_basis(m));
  }
  for (std::size_t i = 0; i + 1 < f.chain.size(); ++i)
    if (!span_contains(f.chain[i + 1], f.chain[i])) throw std::invalid_argument("Flag::make: not nested");
  return f;
}

Flag Flag::face(std::size_t j) const {
  if (j > length() || length() == 0) throw std::invalid_argument("Flag::face: index out of range");
  Flag out = *this;
  out.chain.erase(out.chain.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

Flag Flag::degeneracy(std::size_t j) const {
  if (j > length()) throw std::invalid_argument("Flag::degeneracy: index out of range");
  Flag out = *this;
  out.chain.insert(out.chain.begin() + static_cast<std::ptrdiff_t>(j), chain[j]);
  return out;
}

namespace {

Matrix complement_in(const Flag& f, std::size_t a, std::size_t b) {
  const Matrix& ea = f.chain[a];
  const Matrix& eb = f.chain[b];
  if (eb.cols() == 0) return Matrix(f.ambient.dim(), 0);
  const Matrix coeffs = nullspace(ea.transpose() * f.ambient.gram() * eb);
  return span_basis(eb * coeffs);
}

// Follows the digits of j through the recursive description of Cub: a
// leading 1 drops the second flag position, a leading 2 drops the first,
// and a leading 0 selects the first pair when no later digit is 2.
std::optional<std::pair<std::size_t, std::size_t>> vertex_pair(std::size_t n, const CubeIndex& j) {
  std::vector<std::size_t> pos(n + 1);
  for (std::size_t i = 0; i <= n; ++i) pos[i] = i;
  for (std::size_t t = 0; t < j.size(); ++t) {
    if (j[t] == 0) {
      for (std::size_t r = t + 1; r < j.size(); ++r)
        if (j[r] == 2) return std::nullopt;
      return std::make_pair(pos[0], pos[1]);
    }
    pos.erase(pos.begin() + (j[t] == 1 ? 1 : 0));
  }
  return std::make_pair(pos[0], pos[1]);
}

}  // namespace

MetrizedSpace flag_quotient(const Flag& f, std::size_t a, std::size_t b) {
  const Matrix basis = complement_in(f, a, b);
  if (basis.cols() == 0) return MetrizedSpace();
  return induced_subspace_metric(f.ambient, basis);
}

Cube cub(const Flag& f) {
  const std::size_t n = f.length();
  if (n == 0) throw std::invalid_argument("cub: flag of length 0");
  Cube c(n - 1);
  const std::size_t amb = f.ambient.dim();
  std::map<std::pair<std::size_t, std::size_t>, Matrix> cache;
  std::vector<Matrix> frames(c.vertex_count());
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pairs(c.vertex_count());
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    pairs[idx] = vertex_pair(n, c.digits(idx));
    if (!pairs[idx]) {
      frames[idx] = Matrix(amb, 0);
      c.set_vertex(idx, MetrizedSpace(), frames[idx]);
      continue;
    }
    auto it = cache.find(*pairs[idx]);
    if (it == cache.end()) it = cache.emplace(*pairs[idx], complement_in(f, pairs[idx]->first, pairs[idx]->second)).first;
    frames[idx] = it->second;
    c.set_vertex(idx, frames[idx].cols() == 0 ? MetrizedSpace() : induced_subspace_metric(f.ambient, frames[idx]),
                 frames[idx]);
  }
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir < n; ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t t = c.neighbor(idx, dir);
      const Matrix& src = frames[idx];
      const Matrix& tgt = frames[t];
      if (src.cols() == 0 || tgt.cols() == 0) continue;
      const Matrix& below = f.chain[pairs[t]->first];
      auto z = solve(hstack(tgt, below), src);
      if (!z) throw std::logic_error("cub: vertex does not map into its neighbor");
      std::vector<std::size_t> rows(tgt.cols()), cols(src.cols());
      for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = r;
      for (std::size_t q = 0; q < cols.size(); ++q) cols[q] = q;
      c.set_arrow(idx, dir, ScaledMatrix(z->select(rows, cols)));
    }
  }
  return c;
}

std::vector<NamedCheck> face_relations(const Flag& f) {
  std::vector<NamedCheck> out;
  const std::size_t n = f.length();
  if (n < 2) return out;
  const Cube c = cub(f);
  for (std::size_t i = 1; i + 1 <= n; ++i) {
    Flag g = f;
    for (std::size_t j = n; j > i; --j) g = g.face(j);
    Cube rhs0 = cub(g);
    for (std::size_t s = i; s + 2 <= n; ++s) rhs0 = degeneracy(rhs0, s, 0);
    out.push_back({"d" + std::to_string(i) + "^0", face(c, i, 0) == rhs0});

    out.push_back({"d" + std::to_string(i) + "^1", face(c, i, 1) == cub(f.face(i))});

    Flag h = f;
    for (std::size_t j = i; j-- > 0;) h = h.face(j);
    Cube rhs2 = cub(h);
    for (std::size_t s = 1; s < i; ++s) rhs2 = degeneracy(rhs2, s, 1);
    out.push_back({"d" + std::to_string(i) + "^2", face(c, i, 2) == rhs2});
  }
  return out;
}

std::vector<NamedCheck> degeneracy_relations(const Flag& f) {
  std::vector<NamedCheck> out;
  const std::size_t n = f.length();
  if (n == 0) return out;
  const Cube c = cub(f);
  out.push_back({"s0", cub(f.degeneracy(0)) == degeneracy(c, 1, 1)});
  out.push_back({"s" + std::to_string(n), cub(f.degeneracy(n)) == degeneracy(c, n, 0)});
  for (std::size_t i = 1; i < n; ++i)
    out.push_back({"tau" + std::to_string(i), tau_symmetric(cub(f.degeneracy(i)), i)});
  return out;
}

bool cub_chain_property(const Flag& f) {
  const std::size_t n = f.length();
  if (n < 2) throw std::invalid_argument("cub_chain_property: flag length must be at least 2");
  CubeSum sum = cube_differential(cub(f));
  for (std::size_t i = 0; i <= n; ++i) sum.add(cub(f.face(i)), i % 2 == 0 ? 1 : -1);
  return sum.is_degenerate();
}

bool cubsdeg_identity(const Flag& f, std::size_t i) {
  const std::size_t n = f.length();
  if (i < 1 || i >= n) throw std::invalid_argument("cubsdeg_identity: index out of range");
  CubeSum diff = cube_differential(cub(f.degeneracy(i)));
  for (std::size_t j = 0; j < i; ++j) diff.add(cub(f.face(j).degeneracy(i - 1)), j % 2 == 0 ? 1 : -1);
  for (std::size_t j = i + 1; j <= n; ++j) diff.add(cub(f.face(j).degeneracy(i)), j % 2 == 0 ? -1 : 1);
  return diff.is_degenerate();
}

std::optional<Flag> reconstruct_flag(const Cube& c, const MetrizedSpace& ambient) {
  const std::size_t dim = c.dimension();
  const std::size_t m = dim + 1;
  std::vector<Matrix> chain{Matrix(ambient.dim(), 0)};
  for (std::size_t k = 1; k <= m; ++k) {
    CubeIndex j(dim, 0);
    for (std::size_t t = 0; t + 1 < k && t < dim; ++t) j[t] = 1;
    const auto& frame = c.frame(c.index_of(j));
    if (!frame || frame->rows() != ambient.dim()) return std::nullopt;
    if (!span_contains(*frame, chain.back())) return std::nullopt;
    chain.push_back(*frame);
  }
  Flag g = Flag::make(ambient, chain);
  if (!(cub(g) == c)) return std::nullopt;
  return g;
}

bool homotopy_check(const Flag& f, std::size_t i) {
  const std::size_t n = f.length();
  if (i < 1 || i >= n) throw std::invalid_argument("homotopy_check: index out of range");
  const MetrizedSpace& ambient = f.ambient;
  const Integer sign = i % 2 == 1 ? 1 : -1;  // (-1)^{i+1}

  auto discard = [&](const Cube& x) {
    if (is_degenerate(x)) return true;
    auto g = reconstruct_flag(x, ambient);
    if (!g) return false;
    for (std::size_t j = 0; j < i && j + 1 < g->chain.size(); ++j)
      if (g->chain[j] == g->chain[j + 1]) return true;
    return false;
  };

  bool ok = true;
  auto h = [&](const CubeSum& x) {
    CubeSum out;
    for (const auto& [coef, term] : x.terms()) {
      auto g = reconstruct_flag(term, ambient);
      if (!g || i + 1 >= g->chain.size() || !(g->chain[i] == g->chain[i + 1])) {
        ok = false;
        continue;
      }
      out.add(cub(g->degeneracy(i)), coef * sign);
    }
    return out;
  };

  const Cube c = cub(f.degeneracy(i));
  const CubeSum hc(cub(f.degeneracy(i).degeneracy(i)), sign);
  const CubeSum dc = cube_differential(c).filtered(discard);
  CubeSum total = cube_differential(hc) + h(dc);
  total.add(c, -1);
  return ok && total.filtered(discard).is_zero();
}

}  // namespace hermk
