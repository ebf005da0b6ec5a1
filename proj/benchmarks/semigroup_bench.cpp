#include <benchmark/benchmark.h>

#include "numsem/gamma4.hpp"
#include "numsem/semigroup.hpp"
#include "numsem/tangent_cone.hpp"

using namespace numsem;

namespace {

void BM_AperySet(benchmark::State& state) {
  const Int a = state.range(0);
  const NumericalSemigroup s({a, 2 * a + 3, 3 * a + 9, 4 * a + 18});
  for (auto _ : state) {
    benchmark::DoNotOptimize(apery_set(s, a));
  }
  state.SetComplexityN(a);
}
BENCHMARK(BM_AperySet)->RangeMultiplier(10)->Range(1000, 1000000)->Complexity();

void BM_AperySetByScan(benchmark::State& state) {
  // pseudo-polynomial contains() route, for contrast with the residue graph
  const Int a = state.range(0);
  const NumericalSemigroup s({a, 2 * a + 3, 3 * a + 9, 4 * a + 18});
  for (auto _ : state) {
    LengthOracle oracle(s);
    std::vector<Int> out(static_cast<std::size_t>(a), -1);
    Int remaining = a;
    for (Int v = 0; remaining > 0; ++v) {
      if (oracle.max_length(v) >= 0 && out[static_cast<std::size_t>(v % a)] < 0) {
        out[static_cast<std::size_t>(v % a)] = v;
        --remaining;
      }
    }
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_AperySetByScan)->Range(1000, 8000);

void BM_AperyTable(benchmark::State& state) {
  const Gamma4Params p(static_cast<Int>(state.range(0)), 24 + 1);
  const NumericalSemigroup s = gamma4_semigroup(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apery_table(s));
  }
}
BENCHMARK(BM_AperyTable)->Arg(101)->Arg(1001);

void BM_ClosedFormApery(benchmark::State& state) {
  const Gamma4Params p(static_cast<Int>(state.range(0)), 25);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma4_apery(p));
  }
}
BENCHMARK(BM_ClosedFormApery)->Arg(101)->Arg(10001);

void BM_CZDecompose(benchmark::State& state) {
  const Gamma4Params p(static_cast<Int>(state.range(0)), 25);
  const AperyTable table = gamma4_apery_table(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cz_decompose(table));
  }
}
BENCHMARK(BM_CZDecompose)->Arg(101)->Arg(1001);

void BM_BettiDegrees(benchmark::State& state) {
  const Gamma4Params p(static_cast<Int>(state.range(0)), 5);
  const NumericalSemigroup s = gamma4_semigroup(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_degrees(s));
  }
}
BENCHMARK(BM_BettiDegrees)->Arg(13)->Arg(29);

}  // namespace

BENCHMARK_MAIN();
