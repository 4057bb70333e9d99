#include <benchmark/benchmark.h>

#include <cmath>

#include "ildpc/graph_stats.hpp"
#include "ildpc/incidence.hpp"

using namespace ildpc;

static void BM_BuildRingGraph(benchmark::State& state) {
    GraphSpec spec;
    spec.family = Family::ring;
    spec.base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IncidenceGraph g = IncidenceGraph::build(spec);
        benchmark::DoNotOptimize(g.num_edges());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(state.range(0), 6)));
}
BENCHMARK(BM_BuildRingGraph)->Arg(3)->Arg(5)->Arg(7);

static void BM_BuildFieldGraph(benchmark::State& state) {
    GraphSpec spec;
    spec.family = Family::field;
    spec.base = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IncidenceGraph g = IncidenceGraph::build(spec);
        benchmark::DoNotOptimize(g.num_edges());
    }
}
BENCHMARK(BM_BuildFieldGraph)->Arg(3)->Arg(5);

static void BM_ExactGirth(benchmark::State& state) {
    GraphSpec spec;
    spec.family = Family::ring;
    spec.base = static_cast<int>(state.range(0));
    const IncidenceGraph g = IncidenceGraph::build(spec);
    for (auto _ : state) {
        auto r = girth(g);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactGirth)->Arg(2)->Arg(3)->Arg(4);

static void BM_ConnectedComponents(benchmark::State& state) {
    GraphSpec spec;
    spec.family = Family::ring;
    spec.base = static_cast<int>(state.range(0));
    const IncidenceGraph g = IncidenceGraph::build(spec);
    for (auto _ : state) {
        auto comps = connected_components(g);
        benchmark::DoNotOptimize(comps.size());
    }
}
BENCHMARK(BM_ConnectedComponents)->Arg(4)->Arg(6);
