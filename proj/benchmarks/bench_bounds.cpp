#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mec/mec.hpp"

namespace {

mec::MarginalFamily random_family(std::size_t members, std::size_t support,
                                  unsigned seed) {
  std::mt19937_64 rng(seed);
  std::gamma_distribution<double> gamma(1.0, 1.0);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < members; ++i) {
    std::vector<double> row(support);
    double total = 0.0;
    for (double& v : row) total += (v = gamma(rng));
    for (double& v : row) v /= total;
    rows.push_back(std::move(row));
  }
  return mec::make_family(rows);
}

void BM_QstarGreedy(benchmark::State& state) {
  auto family = random_family(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(mec::qstar_greedy(family));
  state.SetComplexityN(state.range(0) * state.range(1));
}
BENCHMARK(BM_QstarGreedy)
    ->Args({4, 16})
    ->Args({4, 64})
    ->Args({4, 256})
    ->Args({4, 1024})
    ->Complexity(benchmark::oNLogN);

void BM_GreedyCoupling(benchmark::State& state) {
  auto family = random_family(static_cast<std::size_t>(state.range(0)),
                              static_cast<std::size_t>(state.range(1)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(mec::greedy_coupling(family));
}
BENCHMARK(BM_GreedyCoupling)->Args({2, 8})->Args({4, 64})->Args({16, 256});

void BM_KAlpha(benchmark::State& state) {
  auto family = random_family(4, static_cast<std::size_t>(state.range(0)), 13);
  auto survival = mec::survival_envelope(family);
  for (auto _ : state) benchmark::DoNotOptimize(mec::k_alpha(survival, 2.0));
}
BENCHMARK(BM_KAlpha)->Arg(8)->Arg(256);

void BM_ExampleOneSweep(benchmark::State& state) {
  auto family = mec::example_one_family();
  for (auto _ : state) {
    mec::BoundsEvaluator evaluator(family, true);
    double acc = 0.0;
    for (int i = 0; i <= 100; ++i) acc += evaluator.at(i * 0.05).k_alpha_bound;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ExampleOneSweep);

void BM_BruteForceOracle(benchmark::State& state) {
  auto family = random_family(2, 4, 17);
  for (auto _ : state) benchmark::DoNotOptimize(mec::brute_force_min_entropy(family, 1.0));
}
BENCHMARK(BM_BruteForceOracle);

}  // namespace

BENCHMARK_MAIN();
