#include "manhattan/exact.hpp"
#include "manhattan/formulas.hpp"
#include "manhattan/rng.hpp"
#include "manhattan/walk.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace manhattan;

void BM_Xoshiro(benchmark::State& state) {
  Xoshiro256StarStar rng(42);
  std::uint64_t acc = 0;
  for (auto _ : state) {
    acc += rng.next();
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_Xoshiro);

// Steps per second of the Monte Carlo hot loop (Manhattan parity fast path).
void BM_SimulateSteps(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  SimConfig config(OrientationRule::manhattan(Dimension(d)));
  config.n_steps = 10'000;
  config.n_chains = 100;
  config.record_stride = 10'000;
  config.check_invariants = false;
  for (auto _ : state) {
    auto moments = simulate(config);
    benchmark::DoNotOptimize(moments.records.back().sum_x[0]);
  }
  state.SetItemsProcessed(state.iterations() * config.n_steps * config.n_chains);
}
BENCHMARK(BM_SimulateSteps)->Arg(2)->Arg(3)->Arg(8);

void BM_SimulateChecked(benchmark::State& state) {
  SimConfig config(OrientationRule::manhattan(Dimension(3)));
  config.n_steps = 2'000;
  config.n_chains = 100;
  config.record_stride = 2'000;
  config.check_invariants = true;
  for (auto _ : state) {
    auto moments = simulate(config);
    benchmark::DoNotOptimize(moments.records.back().sum_x[0]);
  }
  state.SetItemsProcessed(state.iterations() * config.n_steps * config.n_chains);
}
BENCHMARK(BM_SimulateChecked);

// Big-integer DP through n steps.
void BM_ExactDistribution(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const unsigned n = static_cast<unsigned>(state.range(1));
  const auto rule = OrientationRule::manhattan(Dimension(d));
  for (auto _ : state) {
    auto dist = exact_distribution(Dimension(d), n, rule);
    benchmark::DoNotOptimize(dist.counts.size());
  }
}
BENCHMARK(BM_ExactDistribution)->Args({2, 100})->Args({3, 25})->Args({4, 12});

void BM_MsdFormula(benchmark::State& state) {
  const Dimension d(5);
  unsigned n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(msd(d, 500 + (n++ % 16)));
  }
}
BENCHMARK(BM_MsdFormula);

}  // namespace

BENCHMARK_MAIN();
