#include <benchmark/benchmark.h>

#include "ildpc/channel.hpp"
#include "ildpc/decoder.hpp"
#include "ildpc/incidence.hpp"
#include "ildpc/parity_check.hpp"
#include "ildpc/rng.hpp"
#include "ildpc/sim.hpp"

using namespace ildpc;

namespace {

// One noisy frame of the field q=3 code at the given Eb/N0.
std::vector<double> noisy_llr(const CodeInstance& code, double ebn0_db, std::uint64_t frame) {
    ChannelConfig chan;
    chan.ebn0_db = ebn0_db;
    chan.rate_for_sigma = code.rate();
    chan.seed = 99;
    const double variance = noise_variance(chan);
    std::vector<std::uint8_t> msg(code.k(), 0);
    auto signal = bpsk_modulate(code.code().encode(msg));
    CounterStream stream(chan.seed, frame, 0);
    awgn_in_place(signal, std::sqrt(variance), stream);
    return llr_init(signal, variance);
}

CodeInstance field3_code() {
    GraphSpec spec;
    spec.family = Family::field;
    spec.base = 3;
    return CodeInstance::from_parity_check(
        ParityCheckMatrix::from_graph(IncidenceGraph::build(spec)));
}

}  // namespace

static void BM_DecodeSpa(benchmark::State& state) {
    const CodeInstance code = field3_code();
    const double ebn0 = static_cast<double>(state.range(0));
    IterativeDecoder dec(code.parity(), DecoderAlgorithm::sum_product, {});
    std::uint64_t frame = 0;
    for (auto _ : state) {
        const auto llr = noisy_llr(code, ebn0, frame++);
        auto res = dec.decode(llr);
        benchmark::DoNotOptimize(res.iterations_used);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code.n()));
}
BENCHMARK(BM_DecodeSpa)->Arg(2)->Arg(4)->Arg(6);

static void BM_DecodeMinSum(benchmark::State& state) {
    const CodeInstance code = field3_code();
    const double ebn0 = static_cast<double>(state.range(0));
    IterativeDecoder dec(code.parity(), DecoderAlgorithm::min_sum, {});
    std::uint64_t frame = 0;
    for (auto _ : state) {
        const auto llr = noisy_llr(code, ebn0, frame++);
        auto res = dec.decode(llr);
        benchmark::DoNotOptimize(res.iterations_used);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(code.n()));
}
BENCHMARK(BM_DecodeMinSum)->Arg(2)->Arg(4)->Arg(6);

static void BM_RunPoint(benchmark::State& state) {
    const CodeInstance code = field3_code();
    SweepConfig cfg;
    cfg.max_frames = 64;
    cfg.min_bit_errors = 0;
    cfg.threads = 1;
    for (auto _ : state) {
        auto p = run_point(code, cfg, 4.0);
        benchmark::DoNotOptimize(p.bit_errors);
    }
    state.SetItemsProcessed(state.iterations() * 64 * static_cast<std::int64_t>(code.n()));
}
BENCHMARK(BM_RunPoint)->Unit(benchmark::kMillisecond);
