#include "hermk/cubes.hpp"

#include <stdexcept>

namespace hermk {

namespace {

std::size_t pow3(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

Cube::Cube(std::size_t n)
    : n_(n), vertices_(pow3(n)), frames_(pow3(n)), arrows_(pow3(n) * n) {}

std::size_t Cube::index_of(const CubeIndex& j) const {
  if (j.size() != n_) throw std::invalid_argument("Cube::index_of: wrong number of digits");
  std::size_t idx = 0;
  for (unsigned d : j) {
    if (d > 2) throw std::invalid_argument("Cube::index_of: digit out of range");
    idx = idx * 3 + d;
  }
  return idx;
}

CubeIndex Cube::digits(std::size_t index) const {
  CubeIndex j(n_);
  for (std::size_t i = n_; i-- > 0;) {
    j[i] = static_cast<unsigned>(index % 3);
    index /= 3;
  }
  return j;
}

std::size_t Cube::neighbor(std::size_t index, std::size_t dir) const {
  if (dir < 1 || dir > n_) throw std::out_of_range("Cube::neighbor: direction");
  const CubeIndex j = digits(index);
  if (j[dir - 1] == 2) throw std::out_of_range("Cube::neighbor: no arrow out of digit 2");
  return index + pow3(n_ - dir);
}

void Cube::set_vertex(std::size_t index, MetrizedSpace v, std::optional<Matrix> frame) {
  vertices_.at(index) = std::move(v);
  frames_.at(index) = std::move(frame);
  key_.reset();
  const CubeIndex j = digits(index);
  for (std::size_t dir = 1; dir <= n_; ++dir) {
    const std::size_t step = pow3(n_ - dir);
    if (j[dir - 1] < 2) {
      const std::size_t t = index + step;
      arrows_[index * n_ + dir - 1] = ScaledMatrix::zero(vertices_[t].dim(), vertices_[index].dim());
    }
    if (j[dir - 1] > 0) {
      const std::size_t s = index - step;
      arrows_[s * n_ + dir - 1] = ScaledMatrix::zero(vertices_[index].dim(), vertices_[s].dim());
    }
  }
}

const ScaledMatrix& Cube::arrow(std::size_t index, std::size_t dir) const {
  if (dir < 1 || dir > n_) throw std::out_of_range("Cube::arrow: direction");
  return arrows_.at(index * n_ + dir - 1);
}

void Cube::set_arrow(std::size_t index, std::size_t dir, ScaledMatrix m) {
  const std::size_t t = neighbor(index, dir);
  if (m.rows() != vertices_[t].dim() || m.cols() != vertices_[index].dim())
    throw std::invalid_argument("Cube::set_arrow: shape does not match the vertices");
  arrows_[index * n_ + dir - 1] = std::move(m);
  key_.reset();
}

bool Cube::is_zero() const {
  for (const auto& v : vertices_)
    if (v.dim() > 0) return false;
  return true;
}

const std::string& Cube::key() const {
  if (!key_) {
    std::string k = std::to_string(n_) + "|";
    for (const auto& v : vertices_) k += v.key() + ";";
    for (std::size_t idx = 0; idx < vertices_.size(); ++idx) {
      const CubeIndex j = digits(idx);
      for (std::size_t dir = 1; dir <= n_; ++dir)
        if (j[dir - 1] < 2 && vertices_[idx].dim() > 0) k += arrow(idx, dir).to_string() + ";";
    }
    key_ = std::move(k);
  }
  return *key_;
}

Cube point_cube(const MetrizedSpace& v, std::optional<Matrix> frame) {
  Cube c(0);
  c.set_vertex(0, v, std::move(frame));
  return c;
}

Cube line_cube(const SpaceMap& f, const SpaceMap& g) {
  Cube c(1);
  c.set_vertex(0, f.domain());
  c.set_vertex(1, f.codomain());
  c.set_vertex(2, g.codomain());
  c.set_arrow(0, 1, f.matrix());
  c.set_arrow(1, 1, g.matrix());
  return c;
}

Cube face(const Cube& c, std::size_t i, unsigned k) {
  const std::size_t n = c.dimension();
  if (i < 1 || i > n || k > 2) throw std::invalid_argument("face: index out of range");
  Cube out(n - 1);
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    CubeIndex j = out.digits(idx);
    j.insert(j.begin() + static_cast<std::ptrdiff_t>(i - 1), k);
    const std::size_t old = c.index_of(j);
    out.set_vertex(idx, c.vertex(old), c.frame(old));
  }
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    CubeIndex j = out.digits(idx);
    for (std::size_t dir = 1; dir < n; ++dir) {
      if (j[dir - 1] == 2) continue;
      CubeIndex oj = j;
      oj.insert(oj.begin() + static_cast<std::ptrdiff_t>(i - 1), k);
      const std::size_t odir = dir < i ? dir : dir + 1;
      out.set_arrow(idx, dir, c.arrow(c.index_of(oj), odir));
    }
  }
  return out;
}

Cube degeneracy(const Cube& c, std::size_t i, unsigned kind) {
  const std::size_t n = c.dimension();
  if (i < 1 || i > n + 1 || kind > 1) throw std::invalid_argument("degeneracy: index out of range");
  Cube out(n + 1);
  auto live = [&](unsigned t) { return kind == 0 ? t < 2 : t > 0; };
  auto old_index = [&](CubeIndex j) {
    j.erase(j.begin() + static_cast<std::ptrdiff_t>(i - 1));
    return c.index_of(j);
  };
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    const CubeIndex j = out.digits(idx);
    if (!live(j[i - 1])) continue;
    const std::size_t old = old_index(j);
    out.set_vertex(idx, c.vertex(old), c.frame(old));
  }
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    const CubeIndex j = out.digits(idx);
    const unsigned t = j[i - 1];
    for (std::size_t dir = 1; dir <= n + 1; ++dir) {
      if (j[dir - 1] == 2) continue;
      if (dir == i) {
        if (live(t) && live(t + 1)) out.set_arrow(idx, dir, ScaledMatrix::identity(out.vertex(idx).dim()));
        continue;
      }
      if (!live(t)) continue;
      const std::size_t odir = dir < i ? dir : dir - 1;
      out.set_arrow(idx, dir, c.arrow(old_index(j), odir));
    }
  }
  return out;
}

Cube tau(const Cube& c, std::size_t i) {
  const std::size_t n = c.dimension();
  if (i < 1 || i + 1 > n) throw std::invalid_argument("tau: index out of range");
  Cube out(n);
  auto swapped = [&](CubeIndex j) {
    std::swap(j[i - 1], j[i]);
    return c.index_of(j);
  };
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    const std::size_t old = swapped(out.digits(idx));
    out.set_vertex(idx, c.vertex(old), c.frame(old));
  }
  for (std::size_t idx = 0; idx < out.vertex_count(); ++idx) {
    const CubeIndex j = out.digits(idx);
    for (std::size_t dir = 1; dir <= n; ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t odir = dir == i ? i + 1 : (dir == i + 1 ? i : dir);
      out.set_arrow(idx, dir, c.arrow(swapped(j), odir));
    }
  }
  return out;
}

bool tau_symmetric(const Cube& c, std::size_t i) { return tau(c, i) == c; }

bool is_valid_cube(const Cube& c) {
  const std::size_t n = c.dimension();
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= n; ++dir) {
      if (j[dir - 1] != 0) continue;
      const std::size_t mid = c.neighbor(idx, dir);
      const std::size_t end = c.neighbor(mid, dir);
      const Matrix& f = c.arrow(idx, dir).entries();
      const Matrix& g = c.arrow(mid, dir).entries();
      const std::size_t rf = rank(f);
      const std::size_t rg = rank(g);
      if (rf != c.vertex(idx).dim() || rg != c.vertex(end).dim()) return false;
      if (!(g * f).is_zero()) return false;
      if (rf + rg != c.vertex(mid).dim()) return false;
    }
    for (std::size_t a = 1; a <= n; ++a) {
      if (j[a - 1] == 2) continue;
      for (std::size_t b = a + 1; b <= n; ++b) {
        if (j[b - 1] == 2) continue;
        const ScaledMatrix lhs = c.arrow(c.neighbor(idx, a), b) * c.arrow(idx, a);
        const ScaledMatrix rhs = c.arrow(c.neighbor(idx, b), a) * c.arrow(idx, b);
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

bool is_degenerate(const Cube& c) {
  const std::size_t n = c.dimension();
  for (std::size_t i = 1; i <= n; ++i) {
    const Cube mid = face(c, i, 1);
    if (degeneracy(mid, i, 0) == c || degeneracy(mid, i, 1) == c) return true;
  }
  return false;
}

bool is_normalized(const Cube& c) {
  for (std::size_t i = 1; i <= c.dimension(); ++i)
    for (unsigned k = 0; k < 2; ++k)
      if (!face(c, i, k).is_zero()) return false;
  return true;
}

void CubeSum::add(const Cube& c, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto it = terms_.find(c.key());
  if (it == terms_.end()) {
    terms_.emplace(c.key(), std::make_pair(coefficient, c));
    return;
  }
  it->second.first += coefficient;
  if (it->second.first == 0) terms_.erase(it);
}

CubeSum& CubeSum::operator+=(const CubeSum& rhs) {
  for (const auto& [key, term] : rhs.terms_) add(term.second, term.first);
  return *this;
}

CubeSum CubeSum::operator+(const CubeSum& rhs) const {
  CubeSum out = *this;
  out += rhs;
  return out;
}

CubeSum CubeSum::operator-(const CubeSum& rhs) const { return *this + rhs.scaled(-1); }

CubeSum CubeSum::scaled(const Integer& k) const {
  CubeSum out;
  for (const auto& [key, term] : terms_) out.add(term.second, term.first * k);
  return out;
}

std::vector<std::pair<Integer, Cube>> CubeSum::terms() const {
  std::vector<std::pair<Integer, Cube>> out;
  out.reserve(terms_.size());
  for (const auto& [key, term] : terms_) out.push_back(term);
  return out;
}

CubeSum CubeSum::filtered(const std::function<bool(const Cube&)>& discard) const {
  CubeSum out;
  for (const auto& [key, term] : terms_)
    if (!discard(term.second)) out.add(term.second, term.first);
  return out;
}

bool CubeSum::is_degenerate() const {
  for (const auto& [key, term] : terms_)
    if (!hermk::is_degenerate(term.second)) return false;
  return true;
}

CubeSum cube_differential(const Cube& c) {
  CubeSum out;
  for (std::size_t i = 1; i <= c.dimension(); ++i) {
    const Integer s = i % 2 == 0 ? 1 : -1;
    out.add(face(c, i, 0), s);
    out.add(face(c, i, 1), -s);
    out.add(face(c, i, 2), s);
  }
  return out;
}

CubeSum cube_differential(const CubeSum& x) {
  CubeSum out;
  for (const auto& [coef, c] : x.terms()) out += cube_differential(c).scaled(coef);
  return out;
}

}  // namespace hermk
