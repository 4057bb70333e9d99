#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ildpc {

/// Modular arithmetic for the pair Z_{n^2} / Z_n, n >= 2.
///
/// The only nonstandard operation is the power map y -> y^n, evaluated
/// modulo n^2 (reducing modulo n afterwards is well-defined since n | n^2).
class RingCtx {
public:
    static RingCtx build(std::int64_t n) {
        if (n < 2) throw std::invalid_argument("ring base n = " + std::to_string(n) + " must be >= 2");
        RingCtx ctx;
        ctx.n_ = n;
        ctx.n2_ = n * n;
        if (ctx.n2_ <= (1 << 22)) {
            ctx.pow_tab_.resize(static_cast<std::size_t>(ctx.n2_));
            for (std::int64_t y = 0; y < ctx.n2_; ++y)
                ctx.pow_tab_[static_cast<std::size_t>(y)] = ctx.pow_n_raw(y);
        }
        return ctx;
    }

    std::int64_t n() const { return n_; }
    std::int64_t n2() const { return n2_; }

    std::int64_t mod_n(std::int64_t v) const { return ((v % n_) + n_) % n_; }
    std::int64_t mod_n2(std::int64_t v) const { return ((v % n2_) + n2_) % n2_; }

    /// y^n mod n^2 for y in [0, n^2).
    std::int64_t pow_n(std::int64_t y) const {
        if (y < 0 || y >= n2_)
            throw std::invalid_argument("ring element " + std::to_string(y) + " out of range");
        if (!pow_tab_.empty()) return pow_tab_[static_cast<std::size_t>(y)];
        return pow_n_raw(y);
    }

private:
    std::int64_t pow_n_raw(std::int64_t y) const {
        std::int64_t r = 1 % n2_, base = y % n2_;
        std::int64_t e = n_;
        while (e > 0) {
            if (e & 1) r = r * base % n2_;
            base = base * base % n2_;
            e >>= 1;
        }
        return r;
    }

    std::int64_t n_ = 0, n2_ = 0;
    std::vector<std::int64_t> pow_tab_;
};

inline RingCtx build_ring(std::int64_t n) { return RingCtx::build(n); }

}  // namespace ildpc
