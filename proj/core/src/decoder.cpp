#include "ildpc/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ildpc {
namespace {

inline double clamp_mag(double v, double clip) { return std::clamp(v, -clip, clip); }

// Stable pairwise check-node combine for the tanh rule:
// 2 atanh(tanh(a/2) tanh(b/2)).
inline double boxplus(double a, double b) {
    const double m = std::min(std::abs(a), std::abs(b));
    const double sign = (a < 0) == (b < 0) ? 1.0 : -1.0;
    return sign * m + std::log1p(std::exp(-std::abs(a + b))) -
           std::log1p(std::exp(-std::abs(a - b)));
}

inline double sign_min(double a, double b) {
    const double m = std::min(std::abs(a), std::abs(b));
    return (a < 0) == (b < 0) ? m : -m;
}

}  // namespace

IterativeDecoder::IterativeDecoder(const ParityCheckMatrix& H, DecoderAlgorithm algorithm,
                                   DecoderConfig cfg)
    : algorithm_(algorithm), cfg_(cfg), num_vars_(H.cols()), num_checks_(H.rows()) {
    if (cfg_.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
    if (cfg_.normalization <= 0.0 || cfg_.normalization > 1.0)
        throw std::invalid_argument("min-sum normalization must be in (0, 1]");

    check_offset_.resize(num_checks_ + 1, 0);
    for (std::size_t i = 0; i < num_checks_; ++i)
        check_offset_[i + 1] = check_offset_[i] + static_cast<std::uint32_t>(H.row(i).size());
    edge_var_.reserve(check_offset_[num_checks_]);
    for (std::size_t i = 0; i < num_checks_; ++i)
        for (const auto j : H.row(i)) edge_var_.push_back(j);

    var_offset_.resize(num_vars_ + 1, 0);
    for (const auto v : edge_var_) ++var_offset_[v + 1];
    for (std::size_t v = 0; v < num_vars_; ++v) var_offset_[v + 1] += var_offset_[v];
    var_edges_.resize(edge_var_.size());
    std::vector<std::uint32_t> cursor(var_offset_.begin(), var_offset_.end() - 1);
    for (std::uint32_t k = 0; k < edge_var_.size(); ++k)
        var_edges_[cursor[edge_var_[k]]++] = k;

    var_to_check_.resize(edge_var_.size());
    check_to_var_.resize(edge_var_.size());
    posterior_.resize(num_vars_);
    hard_.resize(num_vars_);
    std::size_t max_deg = 0;
    for (std::size_t i = 0; i < num_checks_; ++i)
        max_deg = std::max<std::size_t>(max_deg, check_offset_[i + 1] - check_offset_[i]);
    fwd_.resize(max_deg);
    bwd_.resize(max_deg);
}

bool IterativeDecoder::converged_decisions(std::span<const double> posterior) {
    for (std::size_t v = 0; v < num_vars_; ++v) {
        if (posterior[v] == 0.0) return false;
        hard_[v] = posterior[v] < 0.0 ? 1 : 0;
    }
    for (std::size_t i = 0; i < num_checks_; ++i) {
        std::uint8_t acc = 0;
        for (std::uint32_t k = check_offset_[i]; k < check_offset_[i + 1]; ++k)
            acc ^= hard_[edge_var_[k]];
        if (acc) return false;
    }
    return true;
}

DecodeResult IterativeDecoder::decode(std::span<const double> llr) {
    if (llr.size() != num_vars_) throw std::invalid_argument("llr length does not match block length");

    for (std::size_t v = 0; v < num_vars_; ++v) posterior_[v] = llr[v];

    DecodeResult result;
    if (converged_decisions(posterior_)) {
        result.bits = hard_;
        result.status = DecodeResult::Status::converged;
        result.iterations_used = 0;
        return result;
    }

    for (std::uint32_t k = 0; k < edge_var_.size(); ++k)
        var_to_check_[k] = clamp_mag(llr[edge_var_[k]], cfg_.clip);

    const bool spa = algorithm_ == DecoderAlgorithm::sum_product;
    for (int it = 1; it <= cfg_.max_iter; ++it) {
        // check-node pass: exclusive combination via forward/backward scans
        for (std::size_t i = 0; i < num_checks_; ++i) {
            const std::uint32_t begin = check_offset_[i];
            const std::uint32_t deg = check_offset_[i + 1] - begin;
            if (deg == 0) continue;
            if (deg == 1) {
                check_to_var_[begin] = cfg_.clip;  // empty combine: parity forces bit 0
                continue;
            }
            fwd_[0] = var_to_check_[begin];
            bwd_[deg - 1] = var_to_check_[begin + deg - 1];
            for (std::uint32_t j = 1; j < deg; ++j) {
                fwd_[j] = spa ? boxplus(fwd_[j - 1], var_to_check_[begin + j])
                              : sign_min(fwd_[j - 1], var_to_check_[begin + j]);
                bwd_[deg - 1 - j] = spa ? boxplus(bwd_[deg - j], var_to_check_[begin + deg - 1 - j])
                                        : sign_min(bwd_[deg - j], var_to_check_[begin + deg - 1 - j]);
            }
            const double scale = spa ? 1.0 : cfg_.normalization;
            check_to_var_[begin] = clamp_mag(scale * bwd_[1], cfg_.clip);
            check_to_var_[begin + deg - 1] = clamp_mag(scale * fwd_[deg - 2], cfg_.clip);
            for (std::uint32_t j = 1; j + 1 < deg; ++j) {
                const double ex = spa ? boxplus(fwd_[j - 1], bwd_[j + 1])
                                      : sign_min(fwd_[j - 1], bwd_[j + 1]);
                check_to_var_[begin + j] = clamp_mag(scale * ex, cfg_.clip);
            }
        }

        // variable-node pass
        for (std::size_t v = 0; v < num_vars_; ++v) {
            double total = llr[v];
            for (std::uint32_t e = var_offset_[v]; e < var_offset_[v + 1]; ++e)
                total += check_to_var_[var_edges_[e]];
            posterior_[v] = total;
            for (std::uint32_t e = var_offset_[v]; e < var_offset_[v + 1]; ++e) {
                const std::uint32_t k = var_edges_[e];
                var_to_check_[k] = clamp_mag(total - check_to_var_[k], cfg_.clip);
            }
        }

        if (converged_decisions(posterior_)) {
            result.bits = hard_;
            result.status = DecodeResult::Status::converged;
            result.iterations_used = it;
            return result;
        }
    }

    for (std::size_t v = 0; v < num_vars_; ++v)
        hard_[v] = posterior_[v] < 0.0 ? 1 : 0;
    result.bits = hard_;
    result.status = DecodeResult::Status::max_iterations;
    result.iterations_used = cfg_.max_iter;
    return result;
}

DecodeResult decode_spa(const ParityCheckMatrix& H, std::span<const double> llr, int max_iter,
                        double clip) {
    DecoderConfig cfg;
    cfg.max_iter = max_iter;
    cfg.clip = clip;
    IterativeDecoder dec(H, DecoderAlgorithm::sum_product, cfg);
    return dec.decode(llr);
}

DecodeResult decode_minsum(const ParityCheckMatrix& H, std::span<const double> llr, int max_iter,
                           double normalization, double clip) {
    DecoderConfig cfg;
    cfg.max_iter = max_iter;
    cfg.clip = clip;
    cfg.normalization = normalization;
    IterativeDecoder dec(H, DecoderAlgorithm::min_sum, cfg);
    return dec.decode(llr);
}

}  // namespace ildpc
