// Runs every acceptance criterion at full bounds and prints one line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hermk/verify.hpp"

namespace {

using hermk::CheckRecord;
using hermk::Report;
using hermk::SuiteConfig;

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string detail;
};

class Runner {
 public:
  // Reports are cached so a suite shared by two criteria runs once.
  const Report& run(const std::string& suite, std::size_t max_dim, std::size_t max_k, std::size_t max_n,
                    std::size_t trials) {
    const std::string key = suite + "/" + std::to_string(max_dim) + "/" + std::to_string(max_k) + "/" +
                            std::to_string(max_n) + "/" + std::to_string(trials);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SuiteConfig cfg;
    cfg.suite = suite;
    cfg.max_dim = max_dim;
    cfg.max_k = max_k;
    cfg.max_n = max_n;
    cfg.trials = trials;
    cfg.seed = kSeed;
    return cache_.emplace(key, hermk::run_suite(cfg)).first->second;
  }

 private:
  std::map<std::string, Report> cache_;
};

// All checks of `r` whose claim is in `claims` must pass, and there must be
// at least `minimum` of them.
void require(Outcome& o, const Report& r, const std::set<std::string>& claims, std::size_t minimum) {
  std::size_t seen = 0;
  for (const CheckRecord& c : r.checks) {
    if (!claims.empty() && !claims.count(c.claim_ref)) continue;
    ++seen;
    if (!c.pass) {
      o.pass = false;
      if (o.detail.empty()) o.detail = c.id + " [" + c.instance + "]";
    }
  }
  o.checks += seen;
  if (seen < minimum) {
    o.pass = false;
    o.detail = r.config.suite + ": only " + std::to_string(seen) + " checks, expected " + std::to_string(minimum);
  }
}

struct Criterion {
  int number;
  std::string name;
  std::function<void(Runner&, Outcome&)> body;
};

}  // namespace

int main() {
  Runner runner;
  const std::vector<Criterion> criteria{
      {1, "Koszul exactness and section, dim <= 4, k <= 4",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("koszul-section", 4, 4, 1, 1);
         require(o, rep, {"koszul.exact"}, 16);
         require(o, rep, {"koszul.section-over-image"}, 40);
         require(o, rep, {"koszul.differential-two-routes"}, 40);
       }},
      {2, "norm ratio equals k with closed forms, orthonormal, dim <= 4, k <= 4",
       [](Runner& r, Outcome& o) {
         require(o, r.run("koszul-split", 4, 4, 1, 2), {"koszul.norm-ratio-equals-k"}, 16);
       }},
      {3, "lambda-rescaled pieces split, unrescaled pieces do not",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("koszul-split", 4, 4, 1, 2);
         require(o, rep, {"koszul.lambda-rescaled-pieces-hermitian-split"}, 16);
         require(o, rep, {"koszul.unrescaled-complex-not-hermitian-split"}, 12);
         require(o, rep, {"koszul.secondary-euler-rank"}, 16);
       }},
      {4, "direct-sum matching is an isometry, dims <= 2, k <= 3",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("koszul-sum", 3, 3, 1, 5);
         require(o, rep, {"koszul.direct-sum-matching-isometry"}, 12);
         require(o, rep, {"koszul.secondary-euler-of-total-complex"}, 4);
       }},
      {5, "Newton, compositions and Koszul Euler identities, 1 <= k <= n <= 8",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("symfun", 1, 8, 1, 1);
         require(o, rep, {"symfun.koszul-euler-identity"}, 36);
         require(o, rep, {"symfun.newton-psi-is-power-sum"}, 36);
         require(o, rep, {"symfun.h-from-compositions"}, 36);
         require(o, rep, {"symfun.basis-change-roundtrip"}, 1);
       }},
      {6, "ch commutes with Adams, k <= 4, roots <= 4, truncation <= 6",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("gs-commute", 1, 4, 1, 5);
         require(o, rep, {"symfun.ch-commutes-with-adams"}, 96);
         require(o, rep, {"symfun.graded-adams-multiplicative"}, 5);
       }},
      {7, "modified homology sequences on 200 random maps plus corner cases",
       [](Runner& r, Outcome& o) {
         const Report& rep = r.run("modified-homology", 6, 1, 6, 200);
         require(o, rep, {"homology.modified-exact-sequences"}, 203);
         require(o, rep, {"homology.modified-two-presentations-agree"}, 200);
         require(o, rep, {"homology.modified-quasi-iso-invariance"}, 200);
       }},
      {8, "cube calculus on flags in Q^6, n <= 4 (homotopy n <= 3)",
       [](Runner& r, Outcome& o) {
         require(o, r.run("cub-relations", 1, 1, 4, 5), {}, 100);
         require(o, r.run("cubsdeg", 1, 1, 4, 5), {}, 30);
         require(o, r.run("homotopy", 1, 1, 3, 5), {}, 15);
       }},
      {9, "composition witnesses for k <= 3 are exact or isometric",
       [](Runner& r, Outcome& o) {
         require(o, r.run("koszul-sum", 3, 3, 1, 5), {"koszul.composition-witnesses"}, 6);
         require(o, r.run("symfun", 1, 8, 1, 1), {"symfun.koszul-euler-identity"}, 36);
       }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(runner, o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%zu checks, %lld ms)%s%s\n", o.pass ? "PASS" : "FAIL", c.number,
                c.name.c_str(), o.checks, static_cast<long long>(ms), o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
