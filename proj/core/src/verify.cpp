#include "hermk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hermk/cubes.hpp"
#include "hermk/generators.hpp"
#include "hermk/homology.hpp"
#include "hermk/koszul.hpp"
#include "hermk/symfun.hpp"
#include "json.hpp"

namespace hermk {

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; }));
}

std::size_t Report::failed() const { return checks.size() - passed(); }

namespace {

class Recorder {
 public:
  explicit Recorder(const SuiteConfig& cfg) : cfg_(cfg) {}

  const SuiteConfig& config() const { return cfg_; }

  Rng instance_rng() { return Rng(sub_seed(cfg_.seed, counter_++)); }

  // Exceptions inside a check count as failures.
  void check(const std::string& id, const std::string& instance, const std::string& claim,
             const std::function<bool()>& body) {
    bool pass = false;
    try {
      pass = body();
    } catch (const std::exception&) {
      pass = false;
    }
    records_.push_back({id, instance, claim, pass});
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  SuiteConfig cfg_;
  std::uint64_t counter_ = 0;
  std::vector<CheckRecord> records_;
};

std::string describe(std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::string s;
  for (const auto& [k, v] : fields) {
    if (!s.empty()) s += " ";
    s += std::string(k) + "=" + v;
  }
  return s;
}

std::string str(std::size_t v) { return std::to_string(v); }

// Orthonormal metric plus `trials` random SPD metrics, each with its tag.
std::vector<std::pair<std::string, MetrizedSpace>> metrics(Recorder& rec, std::size_t dim,
                                                           std::size_t trials,
                                                           const std::string& prefix = "e") {
  std::vector<std::pair<std::string, MetrizedSpace>> out{{"orthonormal", MetrizedSpace::orthonormal(dim, prefix)}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = rec.instance_rng();
    out.emplace_back("spd" + str(t), random_spd_space(rng, dim, prefix));
  }
  return out;
}

bool all_hermitian_split(const HermitianComplex& c) {
  for (const auto& s : mu_decompose(c))
    if (!is_exact(s.sequence) || !is_hermitian_split(s.sequence)) return false;
  return true;
}

// Pieces with zero quotient are split for trivial reasons and are skipped.
bool every_nontrivial_piece_fails(const HermitianComplex& c) {
  for (const auto& s : mu_decompose(c))
    if (s.sequence.quot.dim() > 0 && is_hermitian_split(s.sequence)) return false;
  return true;
}

void suite_koszul_split(Recorder& rec) {
  const auto& cfg = rec.config();
  for (std::size_t n = 1; n <= cfg.max_dim; ++n)
    for (unsigned k = 1; k <= cfg.max_k; ++k) {
      for (const auto& [tag, v] : metrics(rec, n, cfg.trials)) {
        const std::string inst = describe({{"dim", str(n)}, {"k", str(k)}, {"metric", tag}});
        rec.check("mu-split", inst, "koszul.lambda-rescaled-pieces-hermitian-split",
                  [&] { return all_hermitian_split(lambda_rescale(koszul_complex(v, k), k)); });
      }
      if (k >= 2) {
        const MetrizedSpace v = MetrizedSpace::orthonormal(n);
        const std::string inst = describe({{"dim", str(n)}, {"k", str(k)}, {"metric", "orthonormal"}});
        rec.check("unrescaled-not-split", inst, "koszul.unrescaled-complex-not-hermitian-split",
                  [&] { return every_nontrivial_piece_fails(koszul_complex(v, k)); });
      }
      const KoszulComplex kc = koszul(MetrizedSpace::orthonormal(n), k);
      rec.check("euler-rank", describe({{"dim", str(n)}, {"k", str(k)}}), "koszul.secondary-euler-rank",
                [&] { return secondary_euler(kc.complex).rank() == Integer(n); });
      for (unsigned p = 0; p < k; ++p) {
        const std::string inst = describe({{"dim", str(n)}, {"k", str(k)}, {"p", str(p)}});
        rec.check("norm-ratio", inst, "koszul.norm-ratio-equals-k", [&] {
          const std::size_t dim = kc.complex.objects[p].dim();
          for (std::size_t idx = 0; idx < dim; ++idx) {
            Vector e(dim);
            e[idx] = 1;
            const KoszulNorms norms = koszul_norms(kc, p, e);
            if (sgn(norms.inclusion_norm_sq) == 0) continue;
            const auto [sw, xw] = kc.basis_word(p, idx);
            const Integer closed = koszul_inclusion_norm_closed_form(k, p, sw, xw, n);
            if (norms.inclusion_norm_sq != Rational(closed)) return false;
            if (norms.quotient_norm_sq != Rational(closed) / k) return false;
            if (norm_ratio(kc, p, e) != k) return false;
          }
          return true;
        });
      }
    }
}

void suite_koszul_section(Recorder& rec) {
  const auto& cfg = rec.config();
  for (std::size_t n = 1; n <= cfg.max_dim; ++n)
    for (unsigned k = 1; k <= cfg.max_k; ++k) {
      const KoszulComplex kc = koszul(MetrizedSpace::orthonormal(n), k);
      const auto& maps = kc.complex.maps;
      const std::string base = describe({{"dim", str(n)}, {"k", str(k)}});
      rec.check("acyclic", base, "koszul.exact", [&] { return is_acyclic(kc.complex); });
      for (unsigned p = 0; p < k; ++p) {
        const std::string inst = base + " p=" + str(p);
        if (p + 1 < k)
          rec.check("im-eq-ker", inst, "koszul.exact",
                    [&] { return same_span(image_basis(maps[p]), kernel_basis(maps[p + 1])); });
        rec.check("explicit-differential", inst, "koszul.differential-two-routes", [&] {
          return koszul_differential_explicit(n, k, p) == maps[p].matrix().as_rational();
        });
        rec.check("section", inst, "koszul.section-over-image", [&] {
          const Matrix phi = maps[p].matrix().as_rational();
          const Matrix psi = koszul_section(kc.base, k, p).matrix().as_rational();
          return phi * psi * phi == phi;
        });
      }
    }
}

void suite_koszul_sum(Recorder& rec) {
  const auto& cfg = rec.config();
  const std::size_t dmax = std::min<std::size_t>(cfg.max_dim, 2);
  const unsigned kmax = static_cast<unsigned>(std::min<std::size_t>(cfg.max_k, 3));
  for (std::size_t dv = 1; dv <= dmax; ++dv)
    for (std::size_t dw = 1; dw <= dmax; ++dw)
      for (unsigned k = 1; k <= kmax; ++k) {
        auto vs = metrics(rec, dv, cfg.trials, "v");
        auto ws = metrics(rec, dw, cfg.trials, "w");
        for (std::size_t t = 0; t < vs.size(); ++t) {
          const std::string inst = describe({{"dim_v", str(dv)}, {"dim_w", str(dw)}, {"k", str(k)},
                                             {"metric", vs[t].first}});
          rec.check("sum-isometry", inst, "koszul.direct-sum-matching-isometry",
                    [&] { return koszul_sum_isometry(vs[t].second, ws[t].second, k); });
        }
      }
  for (std::size_t dv = 1; dv <= dmax; ++dv)
    for (std::size_t dw = 1; dw <= dmax; ++dw)
      for (unsigned k = 2; k <= kmax; ++k)
        for (unsigned i = 1; i < k; ++i) {
          const std::string inst =
              describe({{"dim_v", str(dv)}, {"dim_w", str(dw)}, {"k", str(k)}, {"i", str(i)}});
          rec.check("phi-hat", inst, "koszul.secondary-euler-of-total-complex", [&] {
            const DoubleComplex b = koszul_product(MetrizedSpace::orthonormal(dv, "v"), k - i,
                                                   MetrizedSpace::orthonormal(dw, "w"), i);
            return secondary_euler(total_complex(b)) == alternating_objects(phi_hat_2(b, i, k));
          });
        }
  for (std::size_t n = 1; n <= dmax; ++n)
    for (unsigned k = 2; k <= kmax; ++k)
      for (const auto& [tag, v] : metrics(rec, n, 1)) {
        const std::string inst = describe({{"dim", str(n)}, {"k", str(k)}, {"metric", tag}});
        rec.check("psicomp-witnesses", inst, "koszul.composition-witnesses", [&] {
          const auto tree = psicomp_tree(v, k);
          if (tree.empty()) return false;
          for (const auto& w : tree)
            if (!verify_witness(w)) return false;
          return true;
        });
      }
}

void suite_symfun(Recorder& rec) {
  const unsigned kmax = static_cast<unsigned>(rec.config().max_k);
  for (unsigned k = 1; k <= kmax; ++k)
    for (std::size_t n = k; n <= kmax; ++n) {
      const std::string inst = describe({{"k", str(k)}, {"n", str(n)}});
      rec.check("newton", inst, "symfun.newton-psi-is-power-sum",
                [&] { return newton_psi(k).expand(n) == power_sum(k, n); });
      rec.check("compositions", inst, "symfun.h-from-compositions",
                [&] { return h_from_compositions(k).expand(n) == complete(k, n); });
      rec.check("koszul-euler", inst, "symfun.koszul-euler-identity",
                [&] { return koszul_euler_identity(k, n); });
      rec.check("basis-change", inst, "symfun.basis-change-roundtrip", [&] {
        const SymPoly p = SymPoly::generator(SymBasis::p, k);
        const SymPoly e = change_basis(p, SymBasis::e);
        const SymPoly h = change_basis(p, SymBasis::h);
        return e.expand(n) == power_sum(k, n) && h.expand(n) == power_sum(k, n) &&
               change_basis(e, SymBasis::p) == p;
      });
    }
}

void suite_gs_commute(Recorder& rec) {
  const auto& cfg = rec.config();
  const unsigned kmax = static_cast<unsigned>(std::min<std::size_t>(cfg.max_k, 4));
  for (unsigned k = 1; k <= kmax; ++k)
    for (std::size_t r = 1; r <= 4; ++r)
      for (unsigned d = 1; d <= 6; ++d) {
        const std::string inst = describe({{"k", str(k)}, {"roots", str(r)}, {"truncation", str(d)}});
        rec.check("ch-adams", inst, "symfun.ch-commutes-with-adams",
                  [&] { return check_gs(ChernRootBundle{r, d, 1}, k); });
      }
  for (unsigned k = 1; k <= kmax; ++k)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = rec.instance_rng();
      GradedElement x, y;
      for (unsigned p = 0; p <= 4; ++p) {
        x.add(p, rat(rng.uniform(-5, 5), rng.uniform(1, 4)));
        y.add(p, rat(rng.uniform(-5, 5), rng.uniform(1, 4)));
      }
      const std::string inst = describe({{"k", str(k)}, {"trial", str(t)}});
      rec.check("adams-multiplicative", inst, "symfun.graded-adams-multiplicative", [&] {
        return graded_adams(x * y, k) == graded_adams(x, k) * graded_adams(y, k);
      });
    }
}

void homology_checks(Recorder& rec, const ChainMap& f, const std::string& inst) {
  rec.check("arithlong", inst, "homology.modified-exact-sequences",
            [&] { return verify_arithlong(f).all_pass(); });
}

void suite_modified_homology(Recorder& rec) {
  const auto& cfg = rec.config();
  const int len = static_cast<int>(std::max<std::size_t>(cfg.max_n, 1));
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = rec.instance_rng();
    const int hi = static_cast<int>(rng.uniform(0, len));
    const ChainComplex a = random_complex(rng, 0, hi, cfg.max_dim);
    const ChainComplex b = random_complex(rng, 0, hi, cfg.max_dim);
    const ChainMap f = random_chain_map(rng, a, b);
    const std::string inst = describe({{"trial", str(t)}, {"length", std::to_string(hi)}});
    homology_checks(rec, f, inst);
    rec.check("two-presentations", inst, "homology.modified-two-presentations-agree", [&] {
      for (int n = std::min(a.min_degree(), b.min_degree()) - 1; n <= hi + 1; ++n) {
        const Subquotient x = modified_homology(f, n);
        const Subquotient y = modified_homology_direct(f, n);
        if (x.dim() != y.dim() || !same_span(x.numerator, y.numerator) ||
            !same_span(x.denominator, y.denominator))
          return false;
      }
      return true;
    });

    const ChainMap q = add_acyclic_summand(rng, a, cfg.max_dim);
    const ChainMap iso = random_chain_isomorphism(rng, b);
    const ChainMap rho = compose(f, q);
    const ChainMap rho_prime = compose(iso, f);
    rec.check("quasi-iso-invariance", inst, "homology.modified-quasi-iso-invariance", [&] {
      if (!is_quasi_isomorphism(q)) return false;
      for (int n = std::min(a.min_degree(), b.min_degree()) - 1; n <= hi + 1; ++n) {
        const SubquotientMap m = induced_modified_map(q, iso, rho, rho_prime, n);
        if (!m.well_defined() || !m.injective() || !m.surjective()) return false;
      }
      return true;
    });
  }

  Rng rng = rec.instance_rng();
  const ChainComplex a = random_complex(rng, 0, len, cfg.max_dim);
  const ChainComplex b = random_complex(rng, 0, len, cfg.max_dim);
  homology_checks(rec, ChainMap::zero(a, b), "corner=rho-zero");
  homology_checks(rec, ChainMap::zero(ChainComplex(), b), "corner=source-zero");
  homology_checks(rec, ChainMap::identity(a), "corner=rho-identity");
}

Flag sample_flag(Rng& rng, std::size_t n) { return random_flag(rng, random_spd_space(rng, 6), n); }

void suite_cub_relations(Recorder& rec) {
  const auto& cfg = rec.config();
  for (std::size_t n = 1; n <= cfg.max_n; ++n)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = rec.instance_rng();
      const Flag f = sample_flag(rng, n);
      const std::string inst = describe({{"n", str(n)}, {"trial", str(t)}});
      rec.check("valid", inst, "cubes.cub-is-exact-cube", [&] { return is_valid_cube(cub(f)); });
      rec.check("d-squared", inst, "cubes.differential-squares-to-zero",
                [&] { return cube_differential(cube_differential(CubeSum(cub(f)))).is_zero(); });
      for (const auto& c : face_relations(f))
        rec.check("face-" + c.name, inst, "cubes.cub-face-relations", [&] { return c.pass; });
      for (const auto& c : degeneracy_relations(f))
        rec.check("degeneracy-" + c.name, inst, "cubes.cub-degeneracy-relations", [&] { return c.pass; });
      if (n >= 2)
        rec.check("chain-property", inst, "cubes.cub-chain-morphism", [&] { return cub_chain_property(f); });
      rec.check("canonical-kernels", inst, "cubes.canonical-kernel-rebuild",
                [&] { return verify_canonical_kernel_rebuild(cub(f)); });
    }
}

void suite_cubsdeg(Recorder& rec) {
  const auto& cfg = rec.config();
  for (std::size_t n = 2; n <= cfg.max_n; ++n)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = rec.instance_rng();
      const Flag f = sample_flag(rng, n);
      for (std::size_t i = 1; i < n; ++i) {
        const std::string inst = describe({{"n", str(n)}, {"i", str(i)}, {"trial", str(t)}});
        rec.check("cubsdeg", inst, "cubes.differential-of-degenerate-cub",
                  [&] { return cubsdeg_identity(f, i); });
        rec.check("degenerate-stable", inst, "cubes.degenerate-span-stable", [&] {
          const Cube c = degeneracy(cub(f), i, static_cast<unsigned>(t % 2));
          return cube_differential(c).is_degenerate();
        });
      }
    }
}

void suite_homotopy(Recorder& rec) {
  const auto& cfg = rec.config();
  const std::size_t nmax = std::min<std::size_t>(cfg.max_n, 3);
  for (std::size_t n = 2; n <= nmax; ++n)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = rec.instance_rng();
      const Flag f = sample_flag(rng, n);
      for (std::size_t i = 1; i < n; ++i) {
        const std::string inst = describe({{"n", str(n)}, {"i", str(i)}, {"trial", str(t)}});
        rec.check("homotopy", inst, "cubes.filtration-quotient-contractible",
                  [&] { return homotopy_check(f, i); });
      }
    }
}

void suite_split_cubes(Recorder& rec) {
  const auto& cfg = rec.config();
  const std::size_t nmax = std::min<std::size_t>(cfg.max_n, 3);
  for (std::size_t n = 1; n <= nmax; ++n)
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      Rng rng = rec.instance_rng();
      std::vector<MetrizedSpace> corners;
      for (std::size_t c = 0; c < (std::size_t{1} << n); ++c)
        corners.push_back(random_spd_space(rng, static_cast<std::size_t>(rng.uniform(0, 2)),
                                           "c" + str(c) + "_"));
      const Cube sp = direct_sum_cube(corners);
      const std::string inst = describe({{"n", str(n)}, {"trial", str(t)}});
      rec.check("direct-sum-valid", inst, "cubes.direct-sum-cube-exact", [&] { return is_valid_cube(sp); });
      rec.check("direct-sum-split", inst, "cubes.direct-sum-cube-split", [&] { return is_split_cube(sp); });
    }
  for (std::size_t n = 1; n <= cfg.max_dim; ++n)
    for (unsigned k = 2; k <= cfg.max_k; ++k)
      for (const auto& [tag, v] : metrics(rec, n, 1)) {
        const std::string inst = describe({{"dim", str(n)}, {"k", str(k)}, {"metric", tag}});
        rec.check("koszul-pieces-split", inst, "cubes.koszul-pieces-split-1-cubes", [&] {
          for (const auto& s : mu_decompose(lambda_rescale(koszul_complex(v, k), k)))
            if (!is_split_cube(line_cube(s.sequence.inject, s.sequence.project))) return false;
          return true;
        });
      }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng = rec.instance_rng();
    const MetrizedSpace a = MetrizedSpace::orthonormal(1, "a");
    const MetrizedSpace c = MetrizedSpace::orthonormal(1, "c");
    // Middle metric with a nonzero cross term: the extension is not orthogonal.
    const long x = rng.uniform(1, 3);
    const MetrizedSpace b({"a", "c"}, Matrix{{Rational(x * x + 1), Rational(x)}, {Rational(x), Rational(1)}});
    const Cube line = line_cube(SpaceMap(a, b, Matrix{{1}, {0}}), SpaceMap(b, c, Matrix{{0, 1}}));
    rec.check("non-orthogonal-control", describe({{"cross", std::to_string(x)}}),
              "cubes.non-orthogonal-extension-not-split",
              [&] { return is_valid_cube(line) && !is_split_cube(line); });
  }
}

const std::map<std::string, void (*)(Recorder&)>& suites() {
  static const std::map<std::string, void (*)(Recorder&)> table{
      {"koszul-split", suite_koszul_split},
      {"koszul-section", suite_koszul_section},
      {"koszul-sum", suite_koszul_sum},
      {"symfun", suite_symfun},
      {"gs-commute", suite_gs_commute},
      {"modified-homology", suite_modified_homology},
      {"cub-relations", suite_cub_relations},
      {"cubsdeg", suite_cubsdeg},
      {"homotopy", suite_homotopy},
      {"split-cubes", suite_split_cubes},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "koszul-split", "koszul-section", "koszul-sum", "symfun",  "gs-commute",
      "modified-homology", "cub-relations", "cubsdeg", "homotopy", "split-cubes"};
  return names;
}

bool is_suite(const std::string& name) { return suites().count(name) > 0; }

void validate(const SuiteConfig& cfg) {
  if (!is_suite(cfg.suite)) throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (cfg.max_dim == 0 || cfg.max_k == 0 || cfg.max_n == 0 || cfg.trials == 0)
    throw std::invalid_argument("bounds must be positive");
}

Report run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(cfg);
  suites().at(cfg.suite)(rec);
  Report r;
  r.config = cfg;
  r.checks = rec.take();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.config.suite;
  j["seed"] = r.config.seed;
  j["bounds"] = {{"max_dim", r.config.max_dim},
                 {"max_k", r.config.max_k},
                 {"max_n", r.config.max_n},
                 {"trials", r.config.trials}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"id", c.id}, {"instance", c.instance}, {"claim_ref", c.claim_ref}, {"pass", c.pass}});
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
  return j.dump(2) + "\n";
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.config.suite << " seed " << r.config.seed << "\n";
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> per_claim;
  for (const auto& c : r.checks) {
    auto [it, inserted] = per_claim.try_emplace(c.claim_ref, 0, 0);
    if (inserted) order.push_back(c.claim_ref);
    ++it->second.second;
    if (c.pass) ++it->second.first;
  }
  for (const auto& claim : order) {
    const auto& [pass, total] = per_claim[claim];
    out << "  " << (pass == total ? "PASS " : "FAIL ") << claim << " " << pass << "/" << total << "\n";
  }
  for (const auto& c : r.checks)
    if (!c.pass) out << "  failed: " << c.id << " [" << c.instance << "]\n";
  out << "passed " << r.passed() << " failed " << r.failed() << " elapsed_ms "
      << static_cast<std::int64_t>(r.elapsed_ms) << "\n";
  return out.str();
}

}  // namespace hermk
