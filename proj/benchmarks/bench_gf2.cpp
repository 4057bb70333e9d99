#include <benchmark/benchmark.h>

#include "ildpc/gf2.hpp"
#include "ildpc/incidence.hpp"
#include "ildpc/parity_check.hpp"

using namespace ildpc;

namespace {

ParityCheckMatrix ring_matrix(int base) {
    GraphSpec spec;
    spec.family = Family::ring;
    spec.base = base;
    return ParityCheckMatrix::from_graph(IncidenceGraph::build(spec));
}

}  // namespace

static void BM_Gf2Rank(benchmark::State& state) {
    const ParityCheckMatrix H = ring_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = gf2_rank(H);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Gf2Rank)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SystematicGenerator(benchmark::State& state) {
    const ParityCheckMatrix H = ring_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto code = systematic_generator(H);
        benchmark::DoNotOptimize(code.k);
    }
}
BENCHMARK(BM_SystematicGenerator)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Encode(benchmark::State& state) {
    const ParityCheckMatrix H = ring_matrix(3);
    const SystematicCode code = systematic_generator(H);
    std::vector<std::uint8_t> msg(code.k, 0);
    for (std::size_t i = 0; i < msg.size(); i += 3) msg[i] = 1;
    for (auto _ : state) {
        auto cw = code.encode(msg);
        benchmark::DoNotOptimize(cw.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code.n));
}
BENCHMARK(BM_Encode);
