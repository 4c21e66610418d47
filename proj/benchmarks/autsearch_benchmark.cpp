#include <benchmark/benchmark.h>

#include "dihedrant/autsearch.hpp"
#include "dihedrant/cayley.hpp"
#include "dihedrant/families.hpp"
#include "dihedrant/stabilizer_chain.hpp"

using namespace dihedrant;

static void BM_AutPaley(benchmark::State& state)
{
  Graph g = paley((int)state.range(0));
  for (auto _ : state) {
    auto result = automorphism_group(g);
    benchmark::DoNotOptimize(result.generators);
  }
}
BENCHMARK(BM_AutPaley)->Arg(13)->Arg(17)->Arg(29);

static void BM_AutHypercube(benchmark::State& state)
{
  Graph g = hypercube((int)state.range(0));
  for (auto _ : state) {
    auto result = automorphism_group(g);
    benchmark::DoNotOptimize(result.generators);
  }
}
BENCHMARK(BM_AutHypercube)->DenseRange(3, 6);

static void BM_AutCompleteMultipartite(benchmark::State& state)
{
  Graph g = complete_multipartite((int)state.range(0), 2);
  for (auto _ : state) {
    auto result = automorphism_group(g);
    benchmark::DoNotOptimize(result.generators);
  }
}
BENCHMARK(BM_AutCompleteMultipartite)->Arg(5)->Arg(9)->Arg(17);

static void BM_AutDihedrantSeeded(benchmark::State& state)
{
  GroupSpec group = GroupSpec::dihedral((int)state.range(0));
  ConnectionSet s = parse_connection_tokens(group, "y,x^1*y,x^3");
  Graph g = cayley_graph(s);
  AutSearchOptions opt;
  opt.seeds = right_regular_rep(group);
  for (auto _ : state) {
    auto result = automorphism_group(g, opt);
    benchmark::DoNotOptimize(result.generators);
  }
}
BENCHMARK(BM_AutDihedrantSeeded)->Arg(6)->Arg(12)->Arg(17);

static void BM_CanonicalFormGP(benchmark::State& state)
{
  Graph g = generalized_petersen(8, 3);
  for (auto _ : state) {
    auto form = canonical_form(g);
    benchmark::DoNotOptimize(form);
  }
}
BENCHMARK(BM_CanonicalFormGP);

static void BM_SchreierSimsSymmetric(benchmark::State& state)
{
  int n = (int)state.range(0);
  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i)
    cycle[i] = (i + 1) % n;
  std::vector<Perm> gens{Perm::from_cycles(n, {{0, 1}}), Perm(cycle)};
  for (auto _ : state) {
    auto chain = StabilizerChain::build(n, gens);
    benchmark::DoNotOptimize(chain);
  }
}
BENCHMARK(BM_SchreierSimsSymmetric)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
