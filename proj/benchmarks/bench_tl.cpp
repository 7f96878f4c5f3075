#include "tnncert/tl.hpp"

#include <benchmark/benchmark.h>

using namespace tnncert;

static void BM_TLBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tl_basis(n));
}
BENCHMARK(BM_TLBasis)->DenseRange(4, 12, 2);

static void BM_SigmaSingle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Permutation w0 = lex_unrank(n, factorial(static_cast<unsigned>(n)).get_ui() - 1);  // longest element
  for (auto _ : state) benchmark::DoNotOptimize(sigma(w0));
}
BENCHMARK(BM_SigmaSingle)->DenseRange(3, 8);

// Visits every σ row of S_n: table-backed up to kMaxSigmaTableDegree, streamed above.
static void BM_SigmaStream(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t terms = 0;
    for_each_sigma_row(n, [&](std::uint64_t, const SparseRow& row) { terms += row.size(); });
    benchmark::DoNotOptimize(terms);
  }
}
BENCHMARK(BM_SigmaStream)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
