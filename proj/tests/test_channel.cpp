#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "ildpc/channel.hpp"
#include "ildpc/rng.hpp"

using namespace ildpc;

TEST_CASE("noise variance") {
    ChannelConfig cfg;
    cfg.ebn0_db = 0.0;
    cfg.rate_for_sigma = 1.0;
    CHECK(noise_variance(cfg) == doctest::Approx(0.5));
    cfg.ebn0_db = 2.0;
    cfg.rate_for_sigma = 2.0 / 3.0;
    CHECK(noise_variance(cfg) == doctest::Approx(1.0 / (2.0 * (2.0 / 3.0) * std::pow(10.0, 0.2))));
    cfg.ebn0_db = std::numeric_limits<double>::infinity();
    CHECK(noise_variance(cfg) == 0.0);
}

TEST_CASE("bpsk mapping") {
    const std::vector<std::uint8_t> zeros(5, 0);
    for (const double s : bpsk_modulate(zeros)) CHECK(s == 1.0);
    const std::vector<std::uint8_t> bits{1, 0, 1};
    const auto tx = bpsk_modulate(bits);
    CHECK(tx == std::vector<double>{-1.0, 1.0, -1.0});
    // sign demodulation at zero noise recovers the bits
    for (std::size_t i = 0; i < bits.size(); ++i) CHECK((tx[i] < 0 ? 1 : 0) == bits[i]);
}

TEST_CASE("noiseless channel is the identity") {
    ChannelConfig cfg;
    cfg.ebn0_db = std::numeric_limits<double>::infinity();
    const std::vector<double> signal{1.0, -1.0, 1.0};
    CHECK(awgn(signal, cfg) == signal);
}

TEST_CASE("awgn sample statistics") {
    // 10^6 gaussians at ebn0 = 2 dB, rate 2/3
    ChannelConfig cfg;
    cfg.ebn0_db = 2.0;
    cfg.rate_for_sigma = 2.0 / 3.0;
    cfg.seed = 42;
    const double variance = noise_variance(cfg);
    const double sigma = std::sqrt(variance);

    CounterStream stream(cfg.seed, 0, 0);
    const std::size_t n = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = sigma * stream.next_gaussian();
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / static_cast<double>(n);
    const double var = sum_sq / static_cast<double>(n) - mean * mean;
    CHECK(std::abs(mean) < 5.0 * sigma / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - variance) < 0.02 * variance);
}

TEST_CASE("awgn stream is deterministic per (seed, frame)") {
    ChannelConfig cfg;
    cfg.ebn0_db = 3.0;
    cfg.seed = 7;
    const std::vector<double> signal(16, 1.0);
    CHECK(awgn(signal, cfg, 5) == awgn(signal, cfg, 5));
    CHECK(awgn(signal, cfg, 5) != awgn(signal, cfg, 6));
}

TEST_CASE("llr formation") {
    const std::vector<double> r{1.0, 0.0, -0.25};
    const auto llr = llr_init(r, 0.5);
    CHECK(llr[0] == doctest::Approx(4.0));
    CHECK(llr[1] == 0.0);
    CHECK(llr[2] == doctest::Approx(-1.0));

    // zero variance: clipped hard values
    const auto clipped = llr_init(r, 0.0, 30.0);
    CHECK(clipped == std::vector<double>{30.0, 30.0, -30.0});

    // scaling the signal scales LLRs, signs unchanged
    std::vector<double> scaled(r);
    for (auto& v : scaled) v *= 3.0;
    const auto llr2 = llr_init(scaled, 0.5);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(llr2[i] == doctest::Approx(3.0 * llr[i]));
        CHECK(std::signbit(llr2[i]) == std::signbit(llr[i]));
    }
}

TEST_CASE("counter streams are reproducible and index-keyed") {
    CounterStream a(1, 2, 3), b(1, 2, 3), c(1, 2, 4);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    bool differs = false;
    CounterStream a2(1, 2, 3);
    for (int i = 0; i < 100; ++i) differs |= a2.next_u64() != c.next_u64();
    CHECK(differs);
}

TEST_CASE("unit draws live in (0, 1]") {
    CounterStream s(9, 9, 9);
    for (int i = 0; i < 10000; ++i) {
        const double u = s.next_unit();
        CHECK(u > 0.0);
        CHECK(u <= 1.0);
    }
}
