#include <benchmark/benchmark.h>

#include "riordan/arrays.hpp"
#include "riordan/gf_expr.hpp"
#include "riordan/sequences.hpp"
#include "riordan/tp.hpp"
#include "riordan/verify.hpp"

namespace {

using namespace riordan;

MatrixWindow pascal(std::size_t n) {
  const int order = static_cast<int>(n);
  return build_riordan(RiordanSpec{gf_series("1/(1-t)", order), gf_series("t/(1-t)", order)}, n, n);
}

void BM_TpCheckAll(benchmark::State& state) {
  const MatrixWindow m = pascal(static_cast<std::size_t>(state.range(0)));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tp_check(m, order));
  state.counters["minors"] = static_cast<double>(count_minors(m.rows(), m.cols(), order, MinorStrategy::All));
}
BENCHMARK(BM_TpCheckAll)->Args({6, 3})->Args({8, 4})->Args({10, 4});

void BM_TpCheckContiguous(benchmark::State& state) {
  const MatrixWindow m = pascal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tp_check(m, 4, MinorStrategy::ContiguousRows));
}
BENCHMARK(BM_TpCheckContiguous)->Arg(8)->Arg(12);

void BM_JacobiCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixWindow j = tridiagonal_window(azw_family(Family::AZW1, 2, 0), n);
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_tp_check(j, static_cast<int>(n)));
}
BENCHMARK(BM_JacobiCheck)->Arg(12)->Arg(32);

void BM_ExtractProduction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixWindow m = pascal(n);
  for (auto _ : state) benchmark::DoNotOptimize(extract_production(m));
}
BENCHMARK(BM_ExtractProduction)->Arg(8)->Arg(16);

}  // namespace
