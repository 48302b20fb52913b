#include <algorithm>

#include <benchmark/benchmark.h>

#include "gfri/filterbank.hpp"
#include "gfri/multires.hpp"
#include "gfri/random.hpp"
#include "gfri/sampling.hpp"

using namespace gfri;

namespace {

Signal random_signal(SplitMix64& rng, int n) {
  Signal x(n);
  for (int i = 0; i < n; ++i) x[i] = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return x;
}

// K spikes on distinct random vertices
SparseSignal random_sparse(SplitMix64& rng, int n, int K) {
  std::vector<int> support;
  while (static_cast<int>(support.size()) < K) {
    const int c = static_cast<int>(rng.below(n));
    if (std::find(support.begin(), support.end(), c) == support.end()) support.push_back(c);
  }
  std::vector<std::complex<double>> amps;
  for (int i = 0; i < K; ++i) amps.emplace_back(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0));
  return SparseSignal::make(n, support, amps);
}

}  // namespace

static void BM_Analyze(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FilterBankSpec spec{FilterBankKind::hgswt, 2, {0.0}, {1.0}};
  const auto plan = plan_mrt(CirculantGraph::unweighted(n, {1, 3, 5}), spec, 3,
                             CoarseningScheme::spectral);
  SplitMix64 rng(1);
  const Signal x = random_signal(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(x, plan));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Analyze)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

static void BM_AnalyzeSynthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FilterBankSpec spec{FilterBankKind::hgswt, 2, {0.0}, {1.0}};
  const auto plan = plan_mrt(CirculantGraph::unweighted(n, {1, 3, 5}), spec, 3,
                             CoarseningScheme::spectral);
  SplitMix64 rng(2);
  const Signal x = random_signal(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(analyze(x, plan), plan));
}
BENCHMARK(BM_AnalyzeSynthesize)->RangeMultiplier(2)->Range(64, 1024);

static void BM_CheckInvertibility(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto fb = build_hgswt(CirculantGraph::unweighted(n, {1, 2}), 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_invertibility(fb));
}
BENCHMARK(BM_CheckInvertibility)->RangeMultiplier(2)->Range(16, 256);

static void BM_Prony(benchmark::State& state) {
  const int n = 256;
  const int K = static_cast<int>(state.range(0));
  SplitMix64 rng(3);
  const auto y = sample_gft(random_sparse(rng, n, K), 2 * K);
  for (auto _ : state) benchmark::DoNotOptimize(prony_reconstruct(y, K));
}
BENCHMARK(BM_Prony)->DenseRange(2, 16, 2);

static void BM_Pipeline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int K = 3;
  const auto f = factorize_gft(CirculantGraph::unweighted(n, {1, 3, 5}), 2 * K, 3);
  SplitMix64 rng(4);
  const Signal x = random_sparse(rng, n, K).dense();
  for (auto _ : state) benchmark::DoNotOptimize(sample_via_pipeline(x, f));
}
BENCHMARK(BM_Pipeline)->RangeMultiplier(2)->Range(128, 1024);

BENCHMARK_MAIN();
