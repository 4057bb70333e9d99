#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ildpc/channel.hpp"
#include "ildpc/decoder.hpp"
#include "ildpc/gf2.hpp"
#include "ildpc/parity_check.hpp"

namespace ildpc {

enum class MessageSource { random, all_zero };

struct SweepConfig {
    std::vector<double> ebn0_grid_db;     // ascending; +infinity = noiseless
    long max_frames = 100000;
    long min_bit_errors = 100;            // 0 disables the early stop
    DecoderAlgorithm algorithm = DecoderAlgorithm::sum_product;
    DecoderConfig decoder;
    std::uint64_t seed = 1;
    MessageSource message_source = MessageSource::random;
    int threads = 0;                      // 0 = hardware concurrency
};

/// One measured sweep point. bit_error_sq_sum accumulates the squares of the
/// per-frame error counts, giving a burst-aware standard-error estimate
/// sqrt(bit_error_sq_sum)/bits without keeping per-frame data.
struct BerPoint {
    double ebn0_db = 0.0;
    long frames = 0;
    long long bits = 0;
    long long bit_errors = 0;
    double ber = 0.0;
    long frame_errors = 0;
    double fer = 0.0;
    double avg_iterations = 0.0;
    long long bit_error_sq_sum = 0;
};

/// Standard error of the BER estimate of a point.
double ber_standard_error(const BerPoint& p);

/// Encoder + parity-check pair driven by the sweep, or the uncoded BPSK
/// baseline (no checks, hard pass-through decisions).
class CodeInstance {
public:
    static CodeInstance from_parity_check(ParityCheckMatrix H,
                                          std::uint64_t max_dense_bits = std::uint64_t{1} << 31);
    static CodeInstance uncoded(std::size_t n);

    bool is_uncoded() const { return !H_.has_value(); }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    double rate() const { return static_cast<double>(k_) / static_cast<double>(n_); }
    const ParityCheckMatrix& parity() const { return *H_; }
    const SystematicCode& code() const { return *code_; }

private:
    CodeInstance() = default;
    std::optional<ParityCheckMatrix> H_;
    std::optional<SystematicCode> code_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
};

/// Monte-Carlo measurement of one Eb/N0 point. Frames draw their noise and
/// message bits from counter streams keyed by (seed, ebn0, frame index), and
/// the loop processes frames in fixed-size batches, so the result is a pure
/// function of (code, cfg, ebn0_db) whatever the thread count.
BerPoint run_point(const CodeInstance& code, const SweepConfig& cfg, double ebn0_db);

std::vector<BerPoint> run_sweep(const CodeInstance& code, const SweepConfig& cfg);

/// Deterministic CSV: header ebn0_db,frames,bits,bit_errors,ber,frame_errors,
/// fer,avg_iters and one row per point.
std::string emit_csv(std::span<const BerPoint> points);
std::vector<BerPoint> parse_csv(const std::string& text);

/// "start:step:stop" in dB, inclusive of stop within half a step.
std::vector<double> parse_ebn0_grid(const std::string& text);

}  // namespace ildpc
