#include "tnncert/certify.hpp"
#include "tnncert/tnngen.hpp"

#include <benchmark/benchmark.h>

using namespace tnncert;

static void BM_TwoRowTLCoefficients(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(two_row_tl_coefficients(n, n / 2 - 1));
}
BENCHMARK(BM_TwoRowTLCoefficients)->DenseRange(4, 9);

static void BM_MonomialClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monomial_closed_form(n, 1));
}
BENCHMARK(BM_MonomialClosedForm)->DenseRange(4, 9);

static void BM_FischerCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = gen_tnn(n, 3, default_complexity(n)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(fischer_check(a));
}
BENCHMARK(BM_FischerCheck)->DenseRange(4, 9);

static void BM_BJCheckAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = gen_tnn(n, 4, default_complexity(n)).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(bj_check_all(a));
}
BENCHMARK(BM_BJCheckAll)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);
