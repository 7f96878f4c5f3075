#include "tnncert/immanants.hpp"
#include "tnncert/tnngen.hpp"

#include <benchmark/benchmark.h>

using namespace tnncert;

static void BM_ImmTauAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = gen_tnn(n, 1, default_complexity(n)).matrix;
  sigma_table(std::min(n, kMaxSigmaTableDegree));  // exclude table construction
  for (auto _ : state) benchmark::DoNotOptimize(imm_tau_all(a));
}
BENCHMARK(BM_ImmTauAll)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_ImmChar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = gen_tnn(n, 2, default_complexity(n)).matrix;
  const Partition lambda = sorted_partition({n - 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(imm_char(lambda, a));
}
BENCHMARK(BM_ImmChar)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_GenTNN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_tnn(n, seed++, default_complexity(n)));
}
BENCHMARK(BM_GenTNN)->DenseRange(4, 9);
