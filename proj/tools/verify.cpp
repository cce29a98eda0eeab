#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hermk/verify.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(number) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("invalid value for " + key + ": " + text);
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError("invalid value for " + key + ": " + text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for hermitian K-theory constructions"};
  std::string suite;
  std::optional<std::size_t> max_dim, max_k, max_n, trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format, out_path;
  std::string config_path;

  app.add_option("suite", suite, "Suite to run")->required();
  app.add_option("--max-dim", max_dim, "Largest base dimension");
  app.add_option("--max-k", max_k, "Largest Adams/Koszul degree");
  app.add_option("--max-n", max_n, "Largest flag or complex length");
  app.add_option("--trials", trials, "Random instances per shape");
  app.add_option("--seed", seed, "64-bit seed (falls back to HERMK_SEED)");
  app.add_option("--format", format, "text or json");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--config", config_path, "key=value file with defaults");
  app.footer("Suites: koszul-split koszul-section koszul-sum symfun gs-commute modified-homology "
             "cub-relations cubsdeg homotopy split-cubes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  hermk::SuiteConfig cfg;
  cfg.suite = suite;
  std::string fmt = "text";
  std::string path;
  try {
    if (const char* env = std::getenv("HERMK_SEED")) cfg.seed = parse_u64("HERMK_SEED", env);
    if (!config_path.empty()) {
      for (const auto& [key, value] : read_config(config_path)) {
        if (key == "max_dim") cfg.max_dim = parse_u64(key, value);
        else if (key == "max_k") cfg.max_k = parse_u64(key, value);
        else if (key == "max_n") cfg.max_n = parse_u64(key, value);
        else if (key == "trials") cfg.trials = parse_u64(key, value);
        else if (key == "seed") cfg.seed = parse_u64(key, value);
        else if (key == "format") fmt = value;
        else if (key == "out") path = value;
        else throw UsageError("unknown config key: " + key);
      }
    }
    if (max_dim) cfg.max_dim = *max_dim;
    if (max_k) cfg.max_k = *max_k;
    if (max_n) cfg.max_n = *max_n;
    if (trials) cfg.trials = *trials;
    if (seed) cfg.seed = *seed;
    if (format) fmt = *format;
    if (out_path) path = *out_path;
    if (fmt != "text" && fmt != "json") throw UsageError("format must be text or json");
    hermk::validate(cfg);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }

  const hermk::Report report = hermk::run_suite(cfg);
  const std::string body = fmt == "json" ? hermk::report_json(report) : hermk::report_text(report);
  if (path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(path);
    if (!out || !(out << body)) {
      std::cerr << "verify: cannot write " << path << "\n";
      return 2;
    }
  }
  return report.failed() == 0 ? 0 : 1;
}
