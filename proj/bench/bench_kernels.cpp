#include <benchmark/benchmark.h>

#include "factorbench/factor.hpp"
#include "factorbench/graph_io.hpp"
#include "factorbench/toughness.hpp"

using namespace factorbench;

namespace {

Graph dense(int n) { return generate_random(n, Fraction(4, 5), 11); }

Caps caps_for(Execution exec) {
    Caps c;
    c.subset_vertices = 20;
    c.exec = exec;
    return c;
}

void BM_CriterionScan(benchmark::State& state) {
    const Graph g = dense(static_cast<int>(state.range(0)));
    const Caps caps = caps_for(state.range(1) ? Execution::Parallel : Execution::Serial);
    for (auto _ : state) benchmark::DoNotOptimize(check_ab_factor(g, 2, 3, caps).exists);
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_CriterionScan)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ToughnessBruteforce(benchmark::State& state) {
    const Graph g = dense(static_cast<int>(state.range(0)));
    const Execution exec = state.range(1) ? Execution::Parallel : Execution::Serial;
    for (auto _ : state) benchmark::DoNotOptimize(isolated_toughness_bruteforce(g, 20, exec).value);
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}
BENCHMARK(BM_ToughnessBruteforce)->ArgsProduct({{12, 16}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ToughnessIndependentSets(benchmark::State& state) {
    const Graph g = dense(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(isolated_toughness(g).value);
}
BENCHMARK(BM_ToughnessIndependentSets)->Arg(12)->Arg(16)->Arg(32)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_FindFactor(benchmark::State& state) {
    const Graph g = generate_random(static_cast<int>(state.range(0)), Fraction(1, 4), 5);
    for (auto _ : state) benchmark::DoNotOptimize(find_ab_factor(g, 2, 3, Caps{.subset_vertices = 0}).exists);
}
BENCHMARK(BM_FindFactor)->Arg(16)->Arg(32)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_ExtremalNonexistence(benchmark::State& state) {
    const ExtremalWitness h = build_extremal(3, 3, 4, 1);
    const Deleted d = remove(h.graph, DeletionSpec::of_vertices(to_vector(h.deletion_set())));
    for (auto _ : state) benchmark::DoNotOptimize(find_ab_factor(d.graph, 3, 4, Caps{.subset_vertices = 0}).exists);
}
BENCHMARK(BM_ExtremalNonexistence)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
