#include <benchmark/benchmark.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "trajsearch/trajsearch.hpp"

using namespace trajsearch;

namespace {

void BM_BrachOracle(benchmark::State& state) {
  const BrachConfig cfg;
  const auto space = brach_space(cfg);
  const auto oracle = brach_oracle(cfg, space);
  RandomStream rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(oracle(uniform_index(rng, space.size())));
}
BENCHMARK(BM_BrachOracle);

void BM_IsoOracle(benchmark::State& state) {
  const IsoConfig cfg;
  const auto space = iso_space(cfg);
  const auto oracle = iso_oracle(cfg, space);
  RandomStream rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(oracle(uniform_index(rng, space.size())));
}
BENCHMARK(BM_IsoOracle);

void BM_MoonSoftLanding(benchmark::State& state) {
  const MoonConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(solve_soft_landing(cfg, -6.30, -6.30, -6.35));
}
BENCHMARK(BM_MoonSoftLanding);

void BM_GradedQuadrature(benchmark::State& state) {
  QuadratureSpec spec;
  spec.grading = Grading{Endpoint::lower, 16};
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec));
}
BENCHMARK(BM_GradedQuadrature);

void BM_Exhaustive(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::vector<double> c(n);
  RandomStream gen(3);
  for (auto& x : c) x = uniform_unit(gen);
  const CostOracle oracle = [&c](Index i) { return c[i]; };
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_min(oracle, SearchDomain(n)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Exhaustive)->Arg(1 << 12)->Arg(1 << 18);

void BM_DurrHoyer(benchmark::State& state) {
  const auto n = static_cast<Index>(state.range(0));
  std::vector<double> c(n);
  RandomStream gen(4);
  for (auto& x : c) x = uniform_unit(gen);
  const GroverSampler sampler([&c](Index i) { return c[i]; }, SearchDomain(n));
  RandomStream rng(5);
  for (auto _ : state) benchmark::DoNotOptimize(durr_hoyer_min(sampler, SearchDomain(n), rng));
}
BENCHMARK(BM_DurrHoyer)->Arg(1024)->Arg(1 << 16);

void BM_StatevectorGrover(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  const std::vector<Index> marked{1};
  const auto r = optimal_rotations(Index{1} << q, 1);
  for (auto _ : state) benchmark::DoNotOptimize(statevector_grover(q, marked, r));
}
BENCHMARK(BM_StatevectorGrover)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
