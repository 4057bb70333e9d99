#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ildpc {

/// splitmix64 output function: a bijective avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// Counter-based random stream: output i is mix64(key + i*gamma), so any
/// draw is a pure function of (key, i). Streams for distinct (seed, a, b)
/// triples are independent for Monte-Carlo purposes, and simulations can be
/// partitioned across workers by index without coordination.
class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
        key_ = mix64(seed + kGamma);
        key_ = mix64(key_ ^ (a + kGamma));
        key_ = mix64(key_ ^ (b + kGamma));
    }

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

    bool next_bit() { return next_u64() >> 63; }

    /// Uniform in (0, 1]: 53-bit mantissa, shifted away from zero.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached, so a stream's
    /// sequence is fixed regardless of call sites.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ildpc
