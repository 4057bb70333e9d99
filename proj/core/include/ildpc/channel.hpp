#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ildpc/rng.hpp"

namespace ildpc {

/// BPSK over AWGN, parameterised by Eb/N0 in dB. The noise variance is
/// sigma^2 = 1 / (2 * rate * 10^(ebn0_db/10)) per dimension, with `rate`
/// the fraction of transmitted bits carrying information.
struct ChannelConfig {
    double ebn0_db = 0.0;       // +infinity selects the noiseless channel
    double rate_for_sigma = 1.0;
    std::uint64_t seed = 1;
};

double noise_variance(const ChannelConfig& cfg);

/// bit 0 -> +1.0, bit 1 -> -1.0.
std::vector<double> bpsk_modulate(std::span<const std::uint8_t> bits);

/// Adds i.i.d. N(0, sigma^2) noise from the deterministic stream keyed by
/// (cfg.seed, frame_index).
std::vector<double> awgn(std::span<const double> signal, const ChannelConfig& cfg,
                         std::uint64_t frame_index = 0);
void awgn_in_place(std::span<double> signal, double sigma, CounterStream& stream);

/// LLR_i = 2 r_i / sigma^2; positive favours bit 0. A zero variance
/// (noiseless channel) yields +-clip at the received signs.
std::vector<double> llr_init(std::span<const double> received, double variance,
                             double clip = 30.0);

}  // namespace ildpc
