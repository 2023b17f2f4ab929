#include <benchmark/benchmark.h>

#include "wsdual/search.hpp"

namespace {

void BM_EnumerateRows(benchmark::State& state) {
  const auto w = wsdual::parse_weight_system("1,6,14,21;42");
  for (auto _ : state) benchmark::DoNotOptimize(wsdual::enumerate_rows(w));
}
BENCHMARK(BM_EnumerateRows);

void BM_SearchE12(benchmark::State& state) {
  const auto w = wsdual::parse_weight_system("6,14,21;42");
  for (auto _ : state)
    benchmark::DoNotOptimize(wsdual::find_magic_squares({w, w, wsdual::CouplingFilter::primitive, true}));
}
BENCHMARK(BM_SearchE12);

void BM_SearchAlmostPrimitive(benchmark::State& state) {
  const auto wa = wsdual::parse_weight_system("1,3,5;10");
  const auto wb = wsdual::parse_weight_system("4,10,13;30");
  for (auto _ : state) benchmark::DoNotOptimize(wsdual::find_magic_squares({wa, wb}));
}
BENCHMARK(BM_SearchAlmostPrimitive);

void BM_SearchSmallWeights(benchmark::State& state) {
  const auto w = wsdual::parse_weight_system("2,3,4;" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wsdual::find_magic_squares({w, w}));
}
BENCHMARK(BM_SearchSmallWeights)->Arg(12)->Arg(24)->Arg(36);

}  // namespace
