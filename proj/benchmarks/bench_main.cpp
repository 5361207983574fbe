#include <benchmark/benchmark.h>

#include "labelab/dfa.hpp"
#include "labelab/enumerate.hpp"
#include "labelab/pbs.hpp"
#include "labelab/schemes.hpp"
#include "labelab/search.hpp"

namespace {

using namespace labelab;

void BM_Degeneracy(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g = Graph::cycle(n);
    for (int u = 0; u < n; u += 3)
        g.set_edge(u, (u + n / 2) % n, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(degeneracy(g).degeneracy);
}
BENCHMARK(BM_Degeneracy)->Arg(64)->Arg(256);

void BM_CanonicalMin(benchmark::State& state) {
    Graph g = Graph::cycle(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_min(g));
}
BENCHMARK(BM_CanonicalMin)->Arg(6)->Arg(8);

void BM_LexDfaDecode(benchmark::State& state) {
    Dfa d = lex_less_dfa();
    int m = static_cast<int>(state.range(0));
    BitLabel x = BitLabel::from_value(0x35u & ((1u << m) - 1), m);
    BitLabel y = BitLabel::from_value(0x59u & ((1u << m) - 1), m);
    for (auto _ : state)
        benchmark::DoNotOptimize(dfa_decode(d, x, y));
}
BENCHMARK(BM_LexDfaDecode)->Arg(8)->Arg(32);

void BM_FindEqualityLabeling(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Graph g(n, true);
    for (int u = 0; u + 1 < n; ++u)
        g.set_edge(u, u + 1, true);
    FoScheme scheme = fo_scheme(parse_formula("x1 = y2"), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(find_fo_labeling(scheme, g, false).status);
}
BENCHMARK(BM_FindEqualityLabeling)->Arg(4)->Arg(5);

void BM_PbsEvalDisk(benchmark::State& state) {
    Pbs r = disk_pbs();
    std::vector<BigRat> values{BigRat(1, 3), BigRat(2, 5), BigRat(3, 2),
                               BigRat(-7, 4), BigRat(5, 6), BigRat(1, 2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(pbs_eval(r, values));
}
BENCHMARK(BM_PbsEvalDisk);

void BM_PointerNumberAnd(benchmark::State& state) {
    Graph g = Graph::cycle(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            pointer_number(g, PointerLabeling::Mode::and_mode, true));
}
BENCHMARK(BM_PointerNumberAnd);

void BM_CliquewidthEncode(benchmark::State& state) {
    Graph g = Graph::path(4);
    auto tree = build_module_tree(g, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(cliquewidth_encode(g, *tree, 3).labels.size());
}
BENCHMARK(BM_CliquewidthEncode);

} // namespace

BENCHMARK_MAIN();
