#include <map>
#include <stdexcept>

#include "hermk/cubes.hpp"

namespace hermk {

namespace {

std::size_t corner_dimension(std::size_t count) {
  std::size_t n = 0;
  std::size_t p = 1;
  while (p < count) {
    p *= 2;
    ++n;
  }
  if (p != count) throw std::invalid_argument("direct_sum_cube: corner count is not a power of two");
  return n;
}

std::size_t corner_index(const CubeIndex& t) {
  std::size_t idx = 0;
  for (unsigned d : t) idx = idx * 2 + (d == 2 ? 1 : 0);
  return idx;
}

// Corners reachable from j by replacing each 1 with 0 or 2, in
// lexicographic order.
std::vector<CubeIndex> corners_below(const CubeIndex& j) {
  std::vector<CubeIndex> out{j};
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] != 1) continue;
    std::vector<CubeIndex> next;
    for (const auto& t : out)
      for (unsigned d : {0u, 2u}) {
        CubeIndex u = t;
        u[k] = d;
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

std::string corner_tag(const CubeIndex& t) {
  std::string s;
  for (unsigned d : t) s += static_cast<char>('0' + d);
  return s;
}

struct Block {
  std::size_t corner;
  std::size_t offset;
  std::size_t dim;
};

}  // namespace

Cube direct_sum_cube(const std::vector<MetrizedSpace>& corners) {
  const std::size_t n = corner_dimension(corners.size());
  Cube c(n);
  std::vector<std::vector<Block>> layout(c.vertex_count());
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    std::vector<std::pair<std::string, MetrizedSpace>> summands;
    std::size_t offset = 0;
    for (const auto& t : corners_below(c.digits(idx))) {
      const std::size_t ci = corner_index(t);
      summands.emplace_back(corner_tag(t), corners[ci]);
      if (corners[ci].dim() == 0) continue;
      layout[idx].push_back({ci, offset, corners[ci].dim()});
      offset += corners[ci].dim();
    }
    c.set_vertex(idx, orthogonal_sum(summands));
  }
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= n; ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t t = c.neighbor(idx, dir);
      Matrix m(c.vertex(t).dim(), c.vertex(idx).dim());
      for (const auto& s : layout[idx])
        for (const auto& u : layout[t])
          if (s.corner == u.corner)
            for (std::size_t r = 0; r < s.dim; ++r) m(u.offset + r, s.offset + r) = 1;
      c.set_arrow(idx, dir, ScaledMatrix(m));
    }
  }
  return c;
}

bool is_split_cube(const Cube& c) {
  if (!is_valid_cube(c)) return false;
  const std::size_t n = c.dimension();

  // blocks[idx][corner] = component of the canonical map on that summand.
  std::vector<std::map<std::size_t, ScaledMatrix>> blocks(c.vertex_count());
  try {
    for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
      const CubeIndex j = c.digits(idx);
      for (const auto& t : corners_below(j)) {
        const std::size_t tdim = c.vertex(t).dim();
        if (tdim == 0) continue;
        CubeIndex cur = t;
        ScaledMatrix map = ScaledMatrix::identity(tdim);
        for (std::size_t k = 1; k <= n; ++k) {
          if (j[k - 1] != 1) continue;
          if (cur[k - 1] == 0) {
            map = c.arrow(c.index_of(cur), k) * map;
          } else {
            CubeIndex mid = cur, low = cur;
            mid[k - 1] = 1;
            low[k - 1] = 0;
            const ScaledMatrix& proj = c.arrow(c.index_of(mid), k);
            const Matrix& inc = c.arrow(c.index_of(low), k).entries();
            const Matrix comp = orthogonal_complement(c.vertex(mid), span_basis(inc));
            const ScaledMatrix pc = proj * ScaledMatrix(comp);
            if (pc.rows() != pc.cols()) return false;
            map = ScaledMatrix(comp) * pc.inverse() * map;
          }
          cur[k - 1] = 1;
        }
        blocks[idx].emplace(corner_index(t), map);
      }
    }
  } catch (const std::invalid_argument&) {
    return false;
  }

  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const ScaledMatrix gram(c.vertex(idx).gram());
    std::size_t total = 0;
    Matrix stacked(c.vertex(idx).dim(), 0);
    for (const auto& [ct, ft] : blocks[idx]) {
      total += ft.cols();
      stacked = hstack(stacked, ft.entries());
      for (const auto& [cu, fu] : blocks[idx]) {
        const ScaledMatrix pairing = ft.transpose() * gram * fu;
        if (ct == cu) {
          CubeIndex t(n);
          for (std::size_t k = 0; k < n; ++k) t[k] = (ct >> (n - 1 - k)) & 1 ? 2 : 0;
          if (!(pairing == ScaledMatrix(c.vertex(t).gram()))) return false;
        } else if (!pairing.is_zero()) {
          return false;
        }
      }
    }
    if (total != c.vertex(idx).dim() || rank(stacked) != total) return false;
  }

  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= n; ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t t = c.neighbor(idx, dir);
      for (const auto& [ct, ft] : blocks[idx]) {
        const ScaledMatrix lhs = c.arrow(idx, dir) * ft;
        auto it = blocks[t].find(ct);
        if (it == blocks[t].end()) {
          if (!lhs.is_zero()) return false;
        } else if (!(lhs == it->second)) {
          return false;
        }
      }
    }
  }
  return true;
}

CanonicalKernelRebuild canonical_kernel_rebuild(const Cube& c) {
  const std::size_t n = c.dimension();
  CanonicalKernelRebuild out{Cube(n), {}, {}};
  out.isomorphisms.resize(c.vertex_count());
  out.bases.resize(c.vertex_count());
  std::vector<std::optional<ScaledMatrix>> inverses(c.vertex_count());

  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    CubeIndex cur = c.digits(idx);
    const std::size_t d = c.vertex(idx).dim();
    ScaledMatrix path = ScaledMatrix::identity(d);
    for (std::size_t k = 1; k <= n; ++k) {
      if (cur[k - 1] != 0) continue;
      path = c.arrow(c.index_of(cur), k) * path;
      cur[k - 1] = 1;
    }
    const MetrizedSpace& top = c.vertex(cur);
    const Matrix basis = span_basis(path.entries());
    out.bases[idx] = basis;
    if (basis.cols() == 0) {
      out.isomorphisms[idx] = ScaledMatrix::zero(0, d);
      if (d == 0) inverses[idx] = ScaledMatrix::zero(0, 0);
      continue;
    }
    out.isomorphisms[idx] = ScaledMatrix(solve_unique(basis, path.entries()), path.scale_sq());
    if (basis.cols() == d) inverses[idx] = out.isomorphisms[idx].inverse();
    out.rebuilt.set_vertex(idx, induced_subspace_metric(top, basis));
  }

  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= n; ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t t = c.neighbor(idx, dir);
      const Matrix& src = out.bases[idx];
      const Matrix& tgt = out.bases[t];
      if (src.cols() == 0 || tgt.cols() == 0) continue;
      if (j[dir - 1] == 0) {
        auto z = solve(tgt, src);
        if (z) out.rebuilt.set_arrow(idx, dir, ScaledMatrix(*z));
      } else if (inverses[idx]) {
        out.rebuilt.set_arrow(idx, dir, out.isomorphisms[t] * c.arrow(idx, dir) * *inverses[idx]);
      }
    }
  }
  return out;
}

bool verify_canonical_kernel_rebuild(const Cube& c) {
  CanonicalKernelRebuild r;
  try {
    r = canonical_kernel_rebuild(c);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const Cube& b = r.rebuilt;
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const ScaledMatrix& iso = r.isomorphisms[idx];
    if (iso.rows() != c.vertex(idx).dim() || rank(iso.entries()) != iso.rows()) return false;
  }
  if (!is_valid_cube(b)) return false;
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const CubeIndex j = c.digits(idx);
    for (std::size_t dir = 1; dir <= c.dimension(); ++dir) {
      if (j[dir - 1] == 2) continue;
      const std::size_t t = c.neighbor(idx, dir);
      if (j[dir - 1] == 0) {
        const ScaledMatrix& a = b.arrow(idx, dir);
        if (!(a.scale_sq() == 1) || !(r.bases[t] * a.entries() == r.bases[idx])) return false;
      }
      if (!(b.arrow(idx, dir) * r.isomorphisms[idx] == r.isomorphisms[t] * c.arrow(idx, dir)))
        return false;
    }
  }
  return true;
}

}  // namespace hermk
