#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ildpc/parity_check.hpp"

namespace ildpc {

enum class DecoderAlgorithm { sum_product, min_sum };

struct DecoderConfig {
    int max_iter = 50;
    double clip = 30.0;          // message magnitude bound
    double normalization = 0.75; // min-sum scaling, in (0, 1]
};

struct DecodeResult {
    enum class Status { converged, max_iterations };

    std::vector<std::uint8_t> bits;
    Status status = Status::max_iterations;
    int iterations_used = 0;
};

/// Flooding-schedule message passing on the Tanner graph of H. Convergence
/// means the hard decisions satisfy every check and every posterior is
/// nonzero (all decisions determined); it is tested before the first
/// iteration and after each one. Decoding is bitwise deterministic in
/// (H, llr, configuration).
///
/// A decoder instance owns its message buffers: share one per worker, not
/// across threads.
class IterativeDecoder {
public:
    IterativeDecoder(const ParityCheckMatrix& H, DecoderAlgorithm algorithm,
                     DecoderConfig cfg = {});

    DecodeResult decode(std::span<const double> llr);

    std::size_t block_length() const { return num_vars_; }

private:
    bool converged_decisions(std::span<const double> posterior);

    DecoderAlgorithm algorithm_;
    DecoderConfig cfg_;
    std::size_t num_vars_ = 0;
    std::size_t num_checks_ = 0;
    // Tanner graph in CSR form, edges grouped by check.
    std::vector<std::uint32_t> check_offset_;
    std::vector<std::uint32_t> edge_var_;
    std::vector<std::uint32_t> var_offset_;
    std::vector<std::uint32_t> var_edges_;
    // scratch
    std::vector<double> var_to_check_;
    std::vector<double> check_to_var_;
    std::vector<double> posterior_;
    std::vector<double> fwd_, bwd_;
    std::vector<std::uint8_t> hard_;
};

DecodeResult decode_spa(const ParityCheckMatrix& H, std::span<const double> llr, int max_iter,
                        double clip = 30.0);
DecodeResult decode_minsum(const ParityCheckMatrix& H, std::span<const double> llr, int max_iter,
                           double normalization = 0.75, double clip = 30.0);

}  // namespace ildpc
