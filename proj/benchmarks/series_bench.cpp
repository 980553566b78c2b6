#include <benchmark/benchmark.h>

#include "riordan/arrays.hpp"
#include "riordan/gf_expr.hpp"
#include "riordan/series.hpp"

namespace {

using namespace riordan;

Series sample(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = Rational(k % 5 + 1, k % 3 + 1);
  return Series(std::move(c));
}

void BM_Mul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Series a = sample(n), b = sample(n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_Mul)->Arg(16)->Arg(64)->Arg(128);

void BM_Inverse(benchmark::State& state) {
  const Series a = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(BM_Inverse)->Arg(16)->Arg(64);

void BM_Sqrt(benchmark::State& state) {
  const Series a = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sqrt(a));
}
BENCHMARK(BM_Sqrt)->Arg(16)->Arg(64);

void BM_Reversion(benchmark::State& state) {
  const Series f = shift_up(sample(static_cast<int>(state.range(0)) - 1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reversion(f));
}
BENCHMARK(BM_Reversion)->Arg(12)->Arg(24);

void BM_ParseAndEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_series("(1-2*t-sqrt(1-4*t))/(2*t)", n));
}
BENCHMARK(BM_ParseAndEvaluate)->Arg(16)->Arg(64);

void BM_BuildAlmost(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int order = static_cast<int>(n);
  const AlmostRiordanSpec spec{gf_series("1+3*t", order), gf_series("1+t", order), gf_series("2*t+t^2", order)};
  for (auto _ : state) benchmark::DoNotOptimize(build_almost(spec, n, n));
}
BENCHMARK(BM_BuildAlmost)->Arg(8)->Arg(24);

}  // namespace
