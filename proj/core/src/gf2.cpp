#include "ildpc/gf2.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ildpc {

BitMatrix BitMatrix::from_sparse(const ParityCheckMatrix& H) {
    BitMatrix m(H.rows(), H.cols());
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (const auto j : H.row(i)) m.set(i, j, true);
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < words_per_row_; ++k)
        std::swap(data_[a * words_per_row_ + k], data_[b * words_per_row_ + k]);
}

RrefResult gf2_rref(BitMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != r && m.get(i, c)) m.xor_rows(i, r);
        res.pivot_cols.push_back(static_cast<std::uint32_t>(c));
        ++r;
    }
    res.rank = r;
    res.matrix = std::move(m);
    return res;
}

namespace {

void check_dense_budget(const ParityCheckMatrix& H, std::uint64_t max_dense_bits) {
    const std::uint64_t bits = static_cast<std::uint64_t>(H.rows()) * H.cols();
    if (bits > max_dense_bits)
        throw std::invalid_argument("matrix of " + std::to_string(bits) +
                                    " bits exceeds the dense budget of " +
                                    std::to_string(max_dense_bits));
}

}  // namespace

std::size_t gf2_rank(const ParityCheckMatrix& H, std::uint64_t max_dense_bits) {
    check_dense_budget(H, max_dense_bits);
    // Forward elimination only; no need for the full reduced form.
    BitMatrix m = BitMatrix::from_sparse(H);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m.get(i, c)) m.xor_rows(i, r);
        ++r;
    }
    return r;
}

SystematicCode systematic_generator(const ParityCheckMatrix& H, std::uint64_t max_dense_bits) {
    check_dense_budget(H, max_dense_bits);
    const RrefResult rref = gf2_rref(BitMatrix::from_sparse(H));
    const std::size_t n = H.cols();
    const std::size_t rank = rref.rank;
    if (n < rank + 1) throw std::invalid_argument("code dimension k = 0, nothing to generate");
    const std::size_t k = n - rank;

    std::vector<char> is_pivot(n, 0);
    for (const auto c : rref.pivot_cols) is_pivot[c] = 1;

    SystematicCode code;
    code.n = n;
    code.k = k;
    code.perm.reserve(n);
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) code.perm.push_back(static_cast<std::uint32_t>(c));
    for (const auto c : rref.pivot_cols) code.perm.push_back(c);

    // Row j of G encodes the codeword with free column j set: pivot column
    // p_i takes the value rref[i][free_j].
    code.generator = BitMatrix(k, n);
    for (std::size_t j = 0; j < k; ++j) {
        code.generator.set(j, j, true);
        const std::uint32_t free_col = code.perm[j];
        for (std::size_t i = 0; i < rank; ++i)
            if (rref.matrix.get(i, free_col)) code.generator.set(j, k + i, true);
    }
    return code;
}

std::vector<std::uint8_t> SystematicCode::encode(std::span<const std::uint8_t> msg) const {
    if (msg.size() != k) throw std::invalid_argument("message length does not match code dimension");
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> acc(words, 0);
    for (std::size_t j = 0; j < k; ++j) {
        if (msg[j] & 1u) {
            const auto row = generator.row_words(j);
            for (std::size_t w = 0; w < words; ++w) acc[w] ^= row[w];
        }
    }
    std::vector<std::uint8_t> out(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos)
        out[perm[pos]] = static_cast<std::uint8_t>((acc[pos / 64] >> (pos % 64)) & 1u);
    return out;
}

}  // namespace ildpc
