#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ildpc/parity_check.hpp"

namespace ildpc {

/// Dense GF(2) matrix, rows packed into 64-bit words.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), data_(rows * words_per_row_, 0) {}

    static BitMatrix from_sparse(const ParityCheckMatrix& H);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = data_[r * words_per_row_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = v ? (w | mask) : (w & ~mask);
    }
    void xor_rows(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &data_[dst * words_per_row_];
        const std::uint64_t* s = &data_[src * words_per_row_];
        for (std::size_t k = 0; k < words_per_row_; ++k) d[k] ^= s[k];
    }
    void swap_rows(std::size_t a, std::size_t b);

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {&data_[r * words_per_row_], words_per_row_};
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

struct RrefResult {
    BitMatrix matrix;                      // reduced row echelon form
    std::vector<std::uint32_t> pivot_cols; // ascending
    std::size_t rank = 0;
};

/// Gauss-Jordan elimination over GF(2).
RrefResult gf2_rref(BitMatrix m);

/// Rank of H over GF(2) via bit-packed elimination on a dense copy.
/// Throws std::invalid_argument when rows*cols exceeds max_dense_bits.
std::size_t gf2_rank(const ParityCheckMatrix& H,
                     std::uint64_t max_dense_bits = std::uint64_t{1} << 31);

/// Systematic form G = [I_k | A] under a column permutation of H.
/// perm[j] is the original column holding permuted position j; message bits
/// occupy permuted positions [0, k).
struct SystematicCode {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> perm;
    BitMatrix generator;  // k x n over the permuted column order

    /// Codeword in the original column order.
    std::vector<std::uint8_t> encode(std::span<const std::uint8_t> msg) const;
};

/// Throws std::invalid_argument when the code is trivial (k = 0) or the
/// dense budget is exceeded.
SystematicCode systematic_generator(const ParityCheckMatrix& H,
                                    std::uint64_t max_dense_bits = std::uint64_t{1} << 31);

}  // namespace ildpc
