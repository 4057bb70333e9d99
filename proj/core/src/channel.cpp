#include "ildpc/channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ildpc {

double noise_variance(const ChannelConfig& cfg) {
    if (std::isinf(cfg.ebn0_db) && cfg.ebn0_db > 0) return 0.0;
    if (cfg.rate_for_sigma <= 0) throw std::invalid_argument("rate for noise scaling must be > 0");
    return 1.0 / (2.0 * cfg.rate_for_sigma * std::pow(10.0, cfg.ebn0_db / 10.0));
}

std::vector<double> bpsk_modulate(std::span<const std::uint8_t> bits) {
    std::vector<double> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = (bits[i] & 1u) ? -1.0 : 1.0;
    return out;
}

void awgn_in_place(std::span<double> signal, double sigma, CounterStream& stream) {
    if (sigma == 0.0) return;
    for (auto& s : signal) s += sigma * stream.next_gaussian();
}

std::vector<double> awgn(std::span<const double> signal, const ChannelConfig& cfg,
                         std::uint64_t frame_index) {
    std::vector<double> out(signal.begin(), signal.end());
    CounterStream stream(cfg.seed, frame_index, 0);
    awgn_in_place(out, std::sqrt(noise_variance(cfg)), stream);
    return out;
}

std::vector<double> llr_init(std::span<const double> received, double variance, double clip) {
    std::vector<double> llr(received.size());
    if (variance == 0.0) {
        for (std::size_t i = 0; i < llr.size(); ++i)
            llr[i] = received[i] >= 0 ? clip : -clip;
        return llr;
    }
    for (std::size_t i = 0; i < llr.size(); ++i) llr[i] = 2.0 * received[i] / variance;
    return llr;
}

}  // namespace ildpc
