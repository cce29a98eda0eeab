#include "hermk/generators.hpp"

#include <algorithm>

namespace hermk {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(splitmix64(seed) ^ splitmix64(counter + 0x632be59bd9b4e019ULL));
}

long Rng::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

bool Rng::coin(double p_true) { return std::bernoulli_distribution(p_true)(engine_); }

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  return m;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

MetrizedSpace random_spd_space(Rng& rng, std::size_t dim, const std::string& prefix) {
  const Matrix m = random_matrix(rng, dim, dim);
  const Matrix gram = m.transpose() * m + Matrix::identity(dim);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return MetrizedSpace(std::move(labels), gram);
}

Flag random_flag(Rng& rng, const MetrizedSpace& ambient, std::size_t n) {
  const std::size_t amb = ambient.dim();
  std::vector<std::size_t> dims(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) dims[i] = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(amb)));
  std::sort(dims.begin() + 1, dims.end());
  // A random full-rank basis; E_i is spanned by its first dims[i] columns.
  const Matrix basis = random_invertible(rng, amb);
  std::vector<Matrix> chain;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<std::size_t> cols(dims[i]);
    for (std::size_t c = 0; c < dims[i]; ++c) cols[c] = c;
    chain.push_back(basis.select_columns(cols));
  }
  return Flag::make(ambient, chain);
}

ChainComplex random_complex(Rng& rng, int low, int high, std::size_t max_dim) {
  ChainComplex c;
  for (int n = low; n <= high; ++n) c.set_dim(n, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_dim))));
  for (int n = low + 1; n <= high; ++n) {
    if (c.dim(n) == 0 || c.dim(n - 1) == 0) continue;
    const Matrix cycles = nullspace(c.differential(n - 1));
    if (cycles.cols() == 0) continue;
    // Lower the rank now and then so homology is not always trivial.
    const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cycles.cols())));
    std::vector<std::size_t> keep(r);
    for (std::size_t i = 0; i < r; ++i) keep[i] = i;
    const Matrix used = cycles.select_columns(keep);
    c.set_differential(n, used * random_matrix(rng, r, c.dim(n)));
  }
  return c;
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& a, const ChainComplex& b) {
  const int lo = std::min(a.min_degree(), b.min_degree());
  const int hi = std::max(a.max_degree(), b.max_degree());
  std::map<int, std::size_t> offset;
  std::size_t vars = 0;
  for (int n = lo; n <= hi; ++n) {
    offset[n] = vars;
    vars += a.dim(n) * b.dim(n);
  }
  // Row per entry of f_{n-1} d_A(n) - d_B(n) f_n.
  std::vector<Vector> rows;
  for (int n = lo + 1; n <= hi; ++n) {
    const Matrix da = a.differential(n);
    const Matrix db = b.differential(n);
    const std::size_t an = a.dim(n), an1 = a.dim(n - 1), bn = b.dim(n), bn1 = b.dim(n - 1);
    for (std::size_t r = 0; r < bn1; ++r)
      for (std::size_t c = 0; c < an; ++c) {
        Vector row(vars);
        for (std::size_t k = 0; k < an1; ++k) row[offset[n - 1] + r * an1 + k] += da(k, c);
        for (std::size_t k = 0; k < bn; ++k) row[offset[n] + k * an + c] -= db(r, k);
        rows.push_back(std::move(row));
      }
  }
  Matrix system(rows.size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < vars; ++c) system(r, c) = rows[r][c];
  const Matrix solutions = rows.empty() ? Matrix::identity(vars) : nullspace(system);
  Vector x(vars);
  for (std::size_t s = 0; s < solutions.cols(); ++s) {
    const long coef = rng.uniform(-2, 2);
    if (coef == 0) continue;
    for (std::size_t v = 0; v < vars; ++v) x[v] += coef * solutions(v, s);
  }
  ChainMap f(a, b);
  for (int n = lo; n <= hi; ++n) {
    const std::size_t an = a.dim(n), bn = b.dim(n);
    if (an == 0 || bn == 0) continue;
    Matrix m(bn, an);
    for (std::size_t r = 0; r < bn; ++r)
      for (std::size_t c = 0; c < an; ++c) m(r, c) = x[offset[n] + r * an + c];
    f.set_component(n, m);
  }
  return f;
}

ChainMap random_chain_isomorphism(Rng& rng, const ChainComplex& c) {
  std::map<int, Matrix> p, p_inv;
  ChainComplex out;
  for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
    out.set_dim(n, c.dim(n));
    p[n] = random_invertible(rng, c.dim(n));
    p_inv[n] = inverse(p[n]);
  }
  for (int n = c.min_degree() + 1; n <= c.max_degree(); ++n)
    if (c.dim(n) && c.dim(n - 1)) out.set_differential(n, p[n - 1] * c.differential(n) * p_inv[n]);
  ChainMap f(c, out);
  for (int n = c.min_degree(); n <= c.max_degree(); ++n)
    if (c.dim(n)) f.set_component(n, p[n]);
  return f;
}

ChainMap add_acyclic_summand(Rng& rng, const ChainComplex& c, std::size_t max_dim) {
  const int lo = c.empty() ? 0 : c.min_degree();
  const int hi = c.empty() ? 0 : c.max_degree();
  const ChainComplex x = random_complex(rng, lo, hi, max_dim);
  const ChainComplex k = cone(ChainMap::identity(x));
  const int klo = std::min(lo, k.min_degree());
  const int khi = std::max(hi, k.max_degree());
  ChainComplex sum;
  for (int n = klo; n <= khi; ++n) sum.set_dim(n, c.dim(n) + k.dim(n));
  for (int n = klo + 1; n <= khi; ++n)
    if (sum.dim(n) && sum.dim(n - 1)) sum.set_differential(n, block_diag(c.differential(n), k.differential(n)));
  ChainMap proj(sum, c);
  for (int n = klo; n <= khi; ++n)
    if (c.dim(n)) proj.set_component(n, hstack(Matrix::identity(c.dim(n)), Matrix(c.dim(n), k.dim(n))));
  return proj;
}

}  // namespace hermk
