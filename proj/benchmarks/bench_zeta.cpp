#include <benchmark/benchmark.h>

#include "wsdual/catalog.hpp"

namespace {

void BM_ReducedZetaE12(benchmark::State& state) {
  const auto w = wsdual::parse_weight_system("6,14,21;42");
  const auto ms = wsdual::validate(wsdual::IntMatrix{{7, 0, 0}, {0, 3, 0}, {0, 0, 2}}, w, w);
  for (auto _ : state) benchmark::DoNotOptimize(wsdual::reduced_zeta(ms));
}
BENCHMARK(BM_ReducedZetaE12);

void BM_ExpandSeries(benchmark::State& state) {
  const wsdual::CyclotomicProduct p({{1, -1}, {2, 1}, {3, 1}, {6, -1}, {7, 1}, {14, -1}, {21, -1}, {42, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(wsdual::expand_series(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExpandSeries)->Arg(100)->Arg(1000);

void BM_VerifyCatalog(benchmark::State& state) {
  const auto catalog = wsdual::load_catalog();
  for (auto _ : state)
    for (const auto& e : catalog.entries()) benchmark::DoNotOptimize(wsdual::verify_entry(catalog, e));
}
BENCHMARK(BM_VerifyCatalog);

}  // namespace

BENCHMARK_MAIN();
