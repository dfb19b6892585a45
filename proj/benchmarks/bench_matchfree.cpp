#include <benchmark/benchmark.h>

#include "matchfree/even_conn.hpp"
#include "matchfree/homology.hpp"
#include "matchfree/ideal.hpp"
#include "matchfree/shellability.hpp"

using namespace matchfree;

static void BM_MfComplex(benchmark::State& state) {
    Graph g = whisker(make_cycle(static_cast<int>(state.range(0)))).graph();
    for (auto _ : state) benchmark::DoNotOptimize(mf_complex(g, 3));
}
BENCHMARK(BM_MfComplex)->Arg(5)->Arg(6)->Arg(7);

static void BM_MatchingEnumeration(benchmark::State& state) {
    Graph g = whisker(make_cycle(7)).graph();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(g, 3));
}
BENCHMARK(BM_MatchingEnumeration);

static void BM_EvenConnGraph(benchmark::State& state) {
    Graph g = whisker(make_cycle(7)).graph();
    Matching m({{0, 1}, {2, 3}, {4, 5}});
    for (auto _ : state) benchmark::DoNotOptimize(even_conn_graph(g, m));
}
BENCHMARK(BM_EvenConnGraph);

static void BM_BettiGF2(benchmark::State& state) {
    SimplicialComplex c = mf_complex(whisker(make_cycle(static_cast<int>(state.range(0)))).graph(), 2);
    for (auto _ : state) benchmark::DoNotOptimize(reduced_betti(c, Field::GF2));
}
BENCHMARK(BM_BettiGF2)->Arg(5)->Arg(6);

static void BM_CohenMacaulay(benchmark::State& state) {
    SimplicialComplex c = mf_complex(whisker(make_cycle(5)).graph(), 2);
    for (auto _ : state) {
        clear_homology_cache();
        benchmark::DoNotOptimize(is_cohen_macaulay(c, Field::GF2));
    }
}
BENCHMARK(BM_CohenMacaulay);

static void BM_WhiskerShelling(benchmark::State& state) {
    WhiskerGraph w = whisker(make_cycle(5));
    for (auto _ : state) benchmark::DoNotOptimize(constructive_whisker_shelling(w, 3));
}
BENCHMARK(BM_WhiskerShelling);

BENCHMARK_MAIN();
