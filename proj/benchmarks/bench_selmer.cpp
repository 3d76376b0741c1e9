#include <benchmark/benchmark.h>

#include "selmer/formal/norm_cokernel.hpp"
#include "selmer/selmer.hpp"

using namespace selmer;

namespace {
const CurveQ& curve_17a1() {
  static const CurveQ E = derive_invariants(1, -1, 1, -1, -14);
  return E;
}
}  // namespace

static void BM_TraceOfFrobenius(benchmark::State& state) {
  const u64 ell = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(trace_of_frobenius(curve_17a1(), ell).a_ell);
}
BENCHMARK(BM_TraceOfFrobenius)->Arg(101)->Arg(1009)->Arg(10007)->Arg(100003);

static void BM_TorsionDimension(benchmark::State& state) {
  const FrobeniusCache cache(curve_17a1());
  const auto primes = primes_up_to(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (u64 l : primes)
      if (l != 3 && l != 17) total += torsion_dimension(curve_17a1(), l, 2, 3, &cache);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_TorsionDimension)->Arg(1000)->Arg(10000);

static void BM_SelmerReport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(selmer_dimension(curve_17a1(), 3, 2 * 5 * 17 * 19, true).total_lo);
}
BENCHMARK(BM_SelmerReport);

static void BM_Scan(benchmark::State& state) {
  const i64 hi = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(scan_m(curve_17a1(), 3, 2, hi, nullptr, true).size());
}
BENCHMARK(BM_Scan)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

static void BM_FormalGroup(benchmark::State& state) {
  const int prec = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formal::formal_group_of_curve(curve_17a1(), 3, prec).prec());
}
BENCHMARK(BM_FormalGroup)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_NormExpansion(benchmark::State& state) {
  const auto G = formal::formal_group_of_curve(curve_17a1(), 3, 20);
  for (auto _ : state) benchmark::DoNotOptimize(formal::symmetric_norm_series(G, 3, 20).terms);
}
BENCHMARK(BM_NormExpansion)->Unit(benchmark::kMillisecond);

static void BM_NormCokernel(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const CurveQ E = p == 3 ? curve_17a1() : derive_invariants(1, 0, 1, 4, -6);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        formal::norm_cokernel_stable(formal::FormalGroupSpec::of_curve(E), p, static_cast<i64>(p)).dim);
}
BENCHMARK(BM_NormCokernel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
