#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hermk {

struct SuiteConfig {
  std::string suite;
  std::size_t max_dim = 3;
  std::size_t max_k = 3;
  std::size_t max_n = 3;
  std::size_t trials = 5;
  std::uint64_t seed = 1;
};

struct CheckRecord {
  std::string id;
  std::string instance;
  std::string claim_ref;
  bool pass = false;
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0;

  std::size_t passed() const;
  std::size_t failed() const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Bounds must be positive; throws std::invalid_argument otherwise or for
/// an unknown suite.
void validate(const SuiteConfig& cfg);

/// Runs every check of the suite. Instance i draws its randomness from
/// sub_seed(cfg.seed, i), so the report depends only on the config.
Report run_suite(const SuiteConfig& cfg);

/// {suite, seed, bounds, checks:[{id, instance, claim_ref, pass}], passed,
/// failed, elapsed_ms}, keys in that order.
std::string report_json(const Report& r);
/// Totals per claim, then the failing checks.
std::string report_text(const Report& r);

}  // namespace hermk
