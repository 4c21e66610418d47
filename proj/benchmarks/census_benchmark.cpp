#include <benchmark/benchmark.h>

#include "dihedrant/cayley.hpp"
#include "dihedrant/census.hpp"

using namespace dihedrant;

static void BM_EnumerateDihedral(benchmark::State& state)
{
  GroupSpec group = GroupSpec::dihedral((int)state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    enumerate_connection_sets(group, EnumerationMode::UpToEquivalence,
                              [&](const ConnectionSet&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateDihedral)->Arg(8)->Arg(12)->Arg(17);

static void BM_ClassifyDihedrant(benchmark::State& state)
{
  GroupSpec group = GroupSpec::dihedral((int)state.range(0));
  ConnectionSet s = parse_connection_tokens(group, "y,x^1*y,x^2*y");
  for (auto _ : state) {
    auto rec = classify_dihedrant(s);
    benchmark::DoNotOptimize(rec);
  }
}
BENCHMARK(BM_ClassifyDihedrant)->Arg(4)->Arg(9)->Arg(17);

static void BM_CensusSmall(benchmark::State& state)
{
  CensusOptions options;
  options.n_min = 2;
  options.n_max = (int)state.range(0);
  for (auto _ : state) {
    auto report = verify_theorem_1_1(options);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_CensusSmall)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
