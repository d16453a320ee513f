#include <benchmark/benchmark.h>

#include "radpi/approx.hpp"
#include "radpi/fixed.hpp"
#include "radpi/machin.hpp"
#include "radpi/radicals.hpp"
#include "radpi/series.hpp"

namespace {

using radpi::BigInt;
using radpi::BigRational;
using radpi::EngineKind;

void BM_Arctan(benchmark::State& state, EngineKind kind) {
  const BigRational x(BigInt(1), BigInt(5));
  const int p = static_cast<int>(state.range(0));
  std::size_t terms = 0;
  for (auto _ : state) {
    auto r = radpi::arctan_with(kind, x, p);
    terms = r.terms_used;
    benchmark::DoNotOptimize(r);
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK_CAPTURE(BM_Arctan, mse, EngineKind::maclaurin)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Arctan, ese, EngineKind::euler)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Arctan, ase, EngineKind::accelerated)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ArctanSmallArgument(benchmark::State& state) {
  const BigRational x(BigInt(1), radpi::gamma_k(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(radpi::arctan_fast(x, 10000));
}
BENCHMARK(BM_ArctanSmallArgument)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Sqrt(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto two = radpi::FixedReal::from_integer(2, p);
  for (auto _ : state) benchmark::DoNotOptimize(radpi::fx_sqrt(two, p));
}
BENCHMARK(BM_Sqrt)->Arg(1000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_NestedRadical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radpi::nested_c(n, 1000));
}
BENCHMARK(BM_NestedRadical)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_TwoTermFormula(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(radpi::two_term_formula(k));
}
BENCHMARK(BM_TwoTermFormula)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

void BM_PiTwoTerm(benchmark::State& state) {
  radpi::pi_reference(10016);
  for (auto _ : state) benchmark::DoNotOptimize(radpi::pi_two_term(20, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PiTwoTerm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
