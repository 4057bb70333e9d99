#include "ildpc/parity_check.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ildpc {

ParityCheckMatrix::ParityCheckMatrix(std::size_t rows, std::size_t cols,
                                     std::vector<std::vector<std::uint32_t>> row_support)
    : cols_(cols) {
    if (row_support.size() != rows)
        throw std::invalid_argument("row support size does not match row count");
    col_support_.resize(cols);
    for (std::size_t i = 0; i < row_support.size(); ++i) {
        auto& r = row_support[i];
        std::sort(r.begin(), r.end());
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw std::invalid_argument("duplicate column index in row " + std::to_string(i));
        for (const auto j : r) {
            if (j >= cols)
                throw std::invalid_argument("column index out of range in row " + std::to_string(i));
            col_support_[j].push_back(static_cast<std::uint32_t>(i));
        }
        ones_ += r.size();
    }
    row_support_ = std::move(row_support);
}

ParityCheckMatrix ParityCheckMatrix::from_graph(const IncidenceGraph& g) {
    if (g.num_points() == 0 || g.num_lines() == 0)
        throw std::invalid_argument("graph has an empty side");
    return ParityCheckMatrix(g.num_points(), g.num_lines(), g.point_adjacency());
}

std::vector<std::uint8_t> ParityCheckMatrix::syndrome(std::span<const std::uint8_t> word) const {
    if (word.size() != cols_) throw std::invalid_argument("word length does not match column count");
    std::vector<std::uint8_t> s(rows(), 0);
    for (std::size_t i = 0; i < rows(); ++i) {
        std::uint8_t acc = 0;
        for (const auto j : row_support_[i]) acc ^= word[j] & 1u;
        s[i] = acc;
    }
    return s;
}

bool ParityCheckMatrix::syndrome_is_zero(std::span<const std::uint8_t> word) const {
    if (word.size() != cols_) throw std::invalid_argument("word length does not match column count");
    for (const auto& row : row_support_) {
        std::uint8_t acc = 0;
        for (const auto j : row) acc ^= word[j] & 1u;
        if (acc) return false;
    }
    return true;
}

std::string export_alist(const ParityCheckMatrix& H) {
    const std::size_t n = H.cols();
    const std::size_t m = H.rows();
    std::size_t max_col = 0, max_row = 0;
    for (std::size_t j = 0; j < n; ++j) max_col = std::max(max_col, H.col(j).size());
    for (std::size_t i = 0; i < m; ++i) max_row = std::max(max_row, H.row(i).size());

    std::string out;
    auto line_of = [&out](std::span<const std::uint32_t> idx, std::size_t width, bool one_based) {
        for (std::size_t k = 0; k < width; ++k) {
            if (k) out += ' ';
            if (k < idx.size())
                out += std::to_string(idx[k] + (one_based ? 1u : 0u));
            else
                out += '0';
        }
        out += '\n';
    };

    out += std::to_string(n) + ' ' + std::to_string(m) + '\n';
    out += std::to_string(max_col) + ' ' + std::to_string(max_row) + '\n';
    for (std::size_t j = 0; j < n; ++j) {
        if (j) out += ' ';
        out += std::to_string(H.col(j).size());
    }
    out += '\n';
    for (std::size_t i = 0; i < m; ++i) {
        if (i) out += ' ';
        out += std::to_string(H.row(i).size());
    }
    out += '\n';
    for (std::size_t j = 0; j < n; ++j) line_of(H.col(j), max_col, true);
    for (std::size_t i = 0; i < m; ++i) line_of(H.row(i), max_row, true);
    return out;
}

ParityCheckMatrix import_alist(const std::string& text) {
    std::istringstream in(text);
    auto next = [&in]() {
        long long v;
        if (!(in >> v)) throw std::invalid_argument("alist: unexpected end of input");
        return v;
    };
    const long long n = next();
    const long long m = next();
    if (n < 1 || m < 1) throw std::invalid_argument("alist: dimensions must be positive");
    const long long max_col = next();
    const long long max_row = next();
    if (max_col < 0 || max_col > m || max_row < 0 || max_row > n)
        throw std::invalid_argument("alist: maximum weights out of range");

    std::vector<long long> col_w(static_cast<std::size_t>(n)), row_w(static_cast<std::size_t>(m));
    for (auto& w : col_w) {
        w = next();
        if (w < 0 || w > max_col) throw std::invalid_argument("alist: column weight out of range");
    }
    for (auto& w : row_w) {
        w = next();
        if (w < 0 || w > max_row) throw std::invalid_argument("alist: row weight out of range");
    }

    // Column index lists: used only for cross-validation against the rows.
    std::vector<std::vector<std::uint32_t>> cols(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        // Zero-padded files carry max_col entries per line; unpadded carry
        // exactly the column weight. Reading weight-many entries and then
        // skipping any zero padding handles both.
        for (long long k = 0; k < col_w[j]; ++k) {
            const long long v = next();
            if (v < 1 || v > m) throw std::invalid_argument("alist: row index out of range");
            cols[j].push_back(static_cast<std::uint32_t>(v - 1));
        }
        for (long long k = col_w[j]; k < max_col; ++k) {
            const auto pos = in.tellg();
            long long v;
            if (!(in >> v)) throw std::invalid_argument("alist: unexpected end of input");
            if (v != 0) {
                in.seekg(pos);  // unpadded file: this token belongs to the next list
                break;
            }
        }
        std::sort(cols[j].begin(), cols[j].end());
        if (std::adjacent_find(cols[j].begin(), cols[j].end()) != cols[j].end())
            throw std::invalid_argument("alist: duplicate index in column list");
    }

    std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (long long k = 0; k < row_w[i]; ++k) {
            const long long v = next();
            if (v < 1 || v > n) throw std::invalid_argument("alist: column index out of range");
            rows[i].push_back(static_cast<std::uint32_t>(v - 1));
        }
        for (long long k = row_w[i]; k < max_row; ++k) {
            const auto pos = in.tellg();
            long long v;
            if (!(in >> v)) {
                if (i + 1 == rows.size()) break;  // padding may be omitted at EOF
                throw std::invalid_argument("alist: unexpected end of input");
            }
            if (v != 0) {
                in.seekg(pos);
                break;
            }
        }
    }

    ParityCheckMatrix H(static_cast<std::size_t>(m), static_cast<std::size_t>(n), std::move(rows));
    for (std::size_t j = 0; j < cols.size(); ++j)
        if (H.col(j) != cols[j])
            throw std::invalid_argument("alist: row and column lists disagree at column " +
                                        std::to_string(j + 1));
    return H;
}

std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming distance of unequal lengths");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += (x[i] ^ y[i]) & 1u;
    return d;
}

}  // namespace ildpc
