#include "hermk/symfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hermk {

MonomialPoly MonomialPoly::constant(std::size_t variables, const Rational& c) {
  MonomialPoly p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

MonomialPoly MonomialPoly::variable(std::size_t variables, std::size_t i) {
  MonomialPoly p(variables);
  Exponents e(variables, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

void MonomialPoly::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw std::invalid_argument("MonomialPoly: exponent length mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& rhs) const {
  MonomialPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& rhs) const { return *this + rhs.scaled(-1); }

MonomialPoly MonomialPoly::operator*(const MonomialPoly& rhs) const {
  if (vars_ != rhs.vars_) throw std::invalid_argument("MonomialPoly*: variable count mismatch");
  MonomialPoly out(vars_);
  Exponents e(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) {
      for (std::size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

MonomialPoly MonomialPoly::scaled(const Rational& c) const {
  MonomialPoly out(vars_);
  if (sgn(c) == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

std::string MonomialPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) os << "*x" << i + 1 << (e[i] > 1 ? "^" + std::to_string(e[i]) : "");
  }
  return os.str();
}

MonomialPoly elementary(unsigned i, std::size_t n) {
  MonomialPoly out(n);
  if (i > n) return out;
  // Enumerate i-subsets through bitmasks in a selection vector.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + i, true);
  do {
    Exponents e(n, 0);
    for (std::size_t j = 0; j < n; ++j) e[j] = pick[j] ? 1 : 0;
    out.add_term(e, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

MonomialPoly complete(unsigned i, std::size_t n) {
  MonomialPoly out(n);
  Exponents e(n, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t pos, unsigned left) {
    if (pos + 1 == n) {
      e[pos] = left;
      out.add_term(e, 1);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      e[pos] = v;
      fill(pos + 1, left - v);
    }
  };
  if (n == 0) {
    if (i == 0) out.add_term(e, 1);
    return out;
  }
  fill(0, i);
  return out;
}

MonomialPoly power_sum(unsigned i, std::size_t n) {
  if (i == 0) return MonomialPoly::constant(n, Rational(static_cast<long>(n)));
  MonomialPoly out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponents e(n, 0);
    e[j] = i;
    out.add_term(e, 1);
  }
  return out;
}

SymPoly SymPoly::one(SymBasis basis) {
  SymPoly p(basis);
  p.add_term({}, 1);
  return p;
}

SymPoly SymPoly::generator(SymBasis basis, unsigned i) {
  SymPoly p(basis);
  p.add_term(i == 0 ? Partition{} : Partition{i}, 1);
  return p;
}

void SymPoly::add_term(Partition parts, const Rational& c) {
  if (sgn(c) == 0) return;
  std::erase(parts, 0u);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  auto [it, inserted] = terms_.emplace(std::move(parts), c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

SymPoly SymPoly::operator+(const SymPoly& rhs) const {
  if (basis_ != rhs.basis_) throw std::invalid_argument("SymPoly+: basis mismatch");
  SymPoly out = *this;
  for (const auto& [part, c] : rhs.terms_) out.add_term(part, c);
  return out;
}

SymPoly SymPoly::operator*(const SymPoly& rhs) const {
  if (basis_ != rhs.basis_) throw std::invalid_argument("SymPoly*: basis mismatch");
  SymPoly out(basis_);
  for (const auto& [p1, c1] : terms_)
    for (const auto& [p2, c2] : rhs.terms_) {
      Partition merged = p1;
      merged.insert(merged.end(), p2.begin(), p2.end());
      out.add_term(std::move(merged), c1 * c2);
    }
  return out;
}

SymPoly SymPoly::scaled(const Rational& c) const {
  SymPoly out(basis_);
  for (const auto& [part, v] : terms_) out.add_term(part, v * c);
  return out;
}

MonomialPoly SymPoly::expand(std::size_t n) const {
  std::map<unsigned, MonomialPoly> generators;
  auto gen = [&](unsigned i) -> const MonomialPoly& {
    auto it = generators.find(i);
    if (it != generators.end()) return it->second;
    MonomialPoly g = basis_ == SymBasis::e   ? elementary(i, n)
                     : basis_ == SymBasis::h ? complete(i, n)
                                             : power_sum(i, n);
    return generators.emplace(i, std::move(g)).first->second;
  };
  MonomialPoly out(n);
  for (const auto& [part, c] : terms_) {
    MonomialPoly term = MonomialPoly::constant(n, c);
    for (auto i : part) term = term * gen(i);
    out = out + term;
  }
  return out;
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  const char name = basis_ == SymBasis::e ? 'e' : basis_ == SymBasis::h ? 'h' : 'p';
  std::ostringstream os;
  bool first = true;
  for (const auto& [part, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (auto i : part) os << '*' << name << i;
  }
  return os.str();
}

namespace {

// Generator i of basis `from` written in basis `to`.
SymPoly generator_in(SymBasis from, unsigned i, SymBasis to, std::map<unsigned, SymPoly>& memo) {
  if (auto it = memo.find(i); it != memo.end()) return it->second;
  SymPoly result(to);
  if (i == 0 || from == to) {
    result = SymPoly::generator(to, i);
  } else {
    auto y = [&](unsigned j) { return SymPoly::generator(to, j); };
    auto x = [&](unsigned j) { return generator_in(from, j, to, memo); };
    const bool newton_from_p = from == SymBasis::p;
    const bool newton_to_p = to == SymBasis::p;
    for (unsigned j = 1; j <= i; ++j) {
      const Rational sign = j % 2 == 1 ? 1 : -1;
      if (!newton_from_p && !newton_to_p) {
        // e_i = Σ (-1)^{j-1} h_j e_{i-j}, and symmetrically.
        result = result + (y(j) * x(i - j)).scaled(sign);
      } else if (newton_from_p && to == SymBasis::e) {
        // p_i = Σ_{j<i} (-1)^{j-1} e_j p_{i-j} + (-1)^{i-1} i e_i
        result = result + (j < i ? (y(j) * x(i - j)).scaled(sign) : y(i).scaled(sign * i));
      } else if (newton_from_p) {
        // p_i = i h_i - Σ_{j<i} h_{i-j} p_j
        result = result + (j < i ? (y(i - j) * x(j)).scaled(-1) : y(i).scaled(i));
      } else if (from == SymBasis::e) {
        // i e_i = Σ (-1)^{j-1} e_{i-j} p_j
        result = result + (x(i - j) * y(j)).scaled(sign / i);
      } else {
        // i h_i = Σ h_{i-j} p_j
        result = result + (x(i - j) * y(j)).scaled(Rational(1) / i);
      }
    }
  }
  memo.emplace(i, result);
  return result;
}

}  // namespace

SymPoly change_basis(const SymPoly& p, SymBasis target) {
  if (p.basis() == target) return p;
  std::map<unsigned, SymPoly> memo;
  SymPoly out(target);
  for (const auto& [part, c] : p.terms()) {
    SymPoly term = SymPoly::one(target).scaled(c);
    for (auto i : part) term = term * generator_in(p.basis(), i, target, memo);
    out = out + term;
  }
  return out;
}

std::vector<std::vector<unsigned>> compositions(unsigned k) {
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> current;
  std::function<void(unsigned)> build = [&](unsigned left) {
    if (left == 0) {
      all.push_back(current);
      return;
    }
    for (unsigned first = left; first >= 1; --first) {
      current.push_back(first);
      build(left - first);
      current.pop_back();
    }
  };
  if (k > 0) build(k);
  std::stable_sort(all.begin(), all.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return all;
}

SymPoly newton_psi(unsigned k) {
  if (k == 0) throw std::invalid_argument("newton_psi: k must be positive");
  std::vector<SymPoly> psi(k + 1, SymPoly(SymBasis::e));
  for (unsigned m = 1; m <= k; ++m) {
    SymPoly acc(SymBasis::e);
    for (unsigned i = 1; i < m; ++i) {
      const Rational sign = i % 2 == 1 ? 1 : -1;
      acc = acc + (psi[m - i] * SymPoly::generator(SymBasis::e, i)).scaled(sign);
    }
    const Rational sign = m % 2 == 1 ? 1 : -1;
    psi[m] = acc + SymPoly::generator(SymBasis::e, m).scaled(sign * m);
  }
  return psi[k];
}

SymPoly h_from_compositions(unsigned k) {
  SymPoly out(SymBasis::e);
  for (const auto& c : compositions(k)) {
    const Rational sign = (c.size() + k) % 2 == 0 ? 1 : -1;
    out.add_term(Partition(c.begin(), c.end()), sign);
  }
  return out;
}

bool koszul_euler_identity(unsigned k, std::size_t n) {
  MonomialPoly lhs(n);
  for (unsigned p = 0; p < k; ++p) {
    const long coefficient = ((k - p + 1) % 2 == 0 ? 1 : -1) * static_cast<long>(k - p);
    lhs = lhs + (complete(p, n) * elementary(k - p, n)).scaled(coefficient);
  }
  return lhs == power_sum(k, n);
}

Graded<MonomialPoly> formal_ch(const ChernRootBundle& b) {
  const std::size_t r = b.roots;
  Graded<MonomialPoly> out;
  out.add(0, MonomialPoly::constant(r, Rational(static_cast<long>(r))));
  std::vector<MonomialPoly> root_powers;
  for (std::size_t i = 0; i < r; ++i)
    root_powers.push_back(MonomialPoly::constant(r, 1));
  Integer m_factorial = 1;
  for (unsigned m = 1; m <= b.truncation; ++m) {
    m_factorial *= m;
    MonomialPoly pm(r);
    for (std::size_t i = 0; i < r; ++i) {
      root_powers[i] = root_powers[i] * MonomialPoly::variable(r, i).scaled(b.root_scale);
      pm = pm + root_powers[i];
    }
    out.add(m, pm.scaled(Rational(1) / Rational(m_factorial)));
  }
  return out;
}

bool check_gs(const ChernRootBundle& b, unsigned k) {
  ChernRootBundle scaled = b;
  scaled.root_scale = b.root_scale * k;
  return graded_adams(formal_ch(b), k) == formal_ch(scaled);
}

}  // namespace hermk
