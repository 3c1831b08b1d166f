#include <benchmark/benchmark.h>

#include "efalg/catalog.hpp"
#include "efalg/iso.hpp"
#include "efalg/structure.hpp"
#include "efalg/suite.hpp"
#include "efalg/triple.hpp"

namespace efalg {
namespace {

void BM_EnumerateOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order(n, 1, std::max(n, kDefaultEnumerationBound)));
}
BENCHMARK(BM_EnumerateOrder)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto e = catalog_entry(state.range(0) == 0 ? "boolean4" : "triple_diamond").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(e));
}
BENCHMARK(BM_CanonicalForm)->Arg(0)->Arg(1);

void BM_Analyze(benchmark::State& state) {
  const auto e = catalog_entry("chain2_x_chain2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(e));
}
BENCHMARK(BM_Analyze);

void BM_Roundtrip(benchmark::State& state) {
  const auto e = catalog_entry("boolean2_hsum_chain2").algebra;
  for (auto _ : state) benchmark::DoNotOptimize(verify_roundtrip(e));
}
BENCHMARK(BM_Roundtrip);

void BM_Suite(benchmark::State& state) {
  const auto universe = suite_universe(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(universe));
}
BENCHMARK(BM_Suite)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace efalg

BENCHMARK_MAIN();
