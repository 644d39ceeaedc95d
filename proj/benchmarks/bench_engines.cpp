#include <benchmark/benchmark.h>

#include <random>

#include "indexcoding/bounds.hpp"
#include "indexcoding/confusion.hpp"
#include "indexcoding/linear_code.hpp"
#include "indexcoding/suites.hpp"

namespace ic = indexcoding;

namespace {

ic::DiGraph bidirectional_cycle(int n) {
    std::vector<ic::Edge> es;
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        es.push_back({i, j});
        es.push_back({j, i});
    }
    return ic::DiGraph(n, std::move(es));
}

void BM_Mais18(benchmark::State& state) {
    std::mt19937 rng(7);
    ic::DiGraph g = ic::random_digraph(rng, 18, 25);
    for (auto _ : state) benchmark::DoNotOptimize(ic::mais(g).size);
}
BENCHMARK(BM_Mais18);

void BM_Cycle5Coloring(benchmark::State& state) {
    ic::DiGraph c5 = bidirectional_cycle(5);
    ic::AlphabetSpec spec{{2, 2, 2, 2, 2}};
    ic::ConfusionGraph cg = ic::ConfusionGraph::build(c5, spec);
    for (auto _ : state) benchmark::DoNotOptimize(ic::chromatic_number(cg).chi);
}
BENCHMARK(BM_Cycle5Coloring);

void BM_MinrankUnion(benchmark::State& state) {
    ic::DiGraph u = ic::disjoint_union(bidirectional_cycle(5), bidirectional_cycle(5));
    for (auto _ : state) benchmark::DoNotOptimize(ic::minrank_gf2(u, 10));
}
BENCHMARK(BM_MinrankUnion);

void BM_FractionalCover(benchmark::State& state) {
    std::mt19937 rng(11);
    ic::DiGraph g = ic::random_digraph(rng, 9, 55);
    for (auto _ : state) benchmark::DoNotOptimize(ic::fractional_clique_cover(g).first.num());
}
BENCHMARK(BM_FractionalCover);

}  // namespace

BENCHMARK_MAIN();
