#include <benchmark/benchmark.h>

#include "hermk/cubes.hpp"
#include "hermk/generators.hpp"
#include "hermk/homology.hpp"
#include "hermk/koszul.hpp"
#include "hermk/linalg.hpp"
#include "hermk/multilinear.hpp"
#include "hermk/symfun.hpp"

using namespace hermk;

namespace {

// Ryser enumeration is exponential in the size; args are k x k.
void BM_Permanent(benchmark::State& state) {
  Rng rng(1);
  const auto k = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(rng, k, k, -3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_Permanent)->DenseRange(2, 6);

void BM_SymPowerGram(benchmark::State& state) {
  Rng rng(2);
  const MetrizedSpace v = random_spd_space(rng, static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sym_power(v, k));
}
BENCHMARK(BM_SymPowerGram)->ArgsProduct({{2, 3, 4}, {2, 3, 4}});

void BM_KoszulComplex(benchmark::State& state) {
  Rng rng(3);
  const MetrizedSpace v = random_spd_space(rng, static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_complex(v, k));
}
BENCHMARK(BM_KoszulComplex)->ArgsProduct({{2, 3, 4}, {2, 3, 4}});

void BM_MuDecompose(benchmark::State& state) {
  const MetrizedSpace v = MetrizedSpace::orthonormal(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<unsigned>(state.range(1));
  const HermitianComplex c = lambda_rescale(koszul_complex(v, k), k);
  for (auto _ : state) benchmark::DoNotOptimize(mu_decompose(c));
}
BENCHMARK(BM_MuDecompose)->ArgsProduct({{2, 3}, {2, 3}});

void BM_NewtonExpansion(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_euler_identity(k, k));
}
BENCHMARK(BM_NewtonExpansion)->DenseRange(2, 7);

void BM_Cub(benchmark::State& state) {
  Rng rng(4);
  const MetrizedSpace ambient = random_spd_space(rng, 6);
  const Flag f = random_flag(rng, ambient, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cub(f));
}
BENCHMARK(BM_Cub)->DenseRange(1, 4);

void BM_CubChainProperty(benchmark::State& state) {
  Rng rng(5);
  const MetrizedSpace ambient = random_spd_space(rng, 6);
  const Flag f = random_flag(rng, ambient, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cub_chain_property(f));
}
BENCHMARK(BM_CubChainProperty)->DenseRange(2, 4);

void BM_ModifiedHomology(benchmark::State& state) {
  Rng rng(6);
  const auto max_dim = static_cast<std::size_t>(state.range(0));
  const ChainComplex a = random_complex(rng, 0, 4, max_dim);
  const ChainComplex b = random_complex(rng, 0, 4, max_dim);
  const ChainMap f = random_chain_map(rng, a, b);
  for (auto _ : state) benchmark::DoNotOptimize(verify_arithlong(f));
}
BENCHMARK(BM_ModifiedHomology)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
