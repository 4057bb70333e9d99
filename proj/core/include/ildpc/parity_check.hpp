#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ildpc/incidence.hpp"

namespace ildpc {

/// Sparse binary R x N matrix with both row and column support lists kept
/// sorted and mutually consistent. Rows are parity checks, columns are
/// codeword bits. Immutable after construction.
class ParityCheckMatrix {
public:
    ParityCheckMatrix(std::size_t rows, std::size_t cols,
                      std::vector<std::vector<std::uint32_t>> row_support);

    /// Rows = points, columns = lines, entry (i,j) = 1 iff incidence holds;
    /// orders inherited from the graph's vertex indexing.
    static ParityCheckMatrix from_graph(const IncidenceGraph& g);

    std::size_t rows() const { return row_support_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t ones() const { return ones_; }

    const std::vector<std::uint32_t>& row(std::size_t i) const { return row_support_[i]; }
    const std::vector<std::uint32_t>& col(std::size_t j) const { return col_support_[j]; }

    /// H * word^T over GF(2); word has length cols().
    std::vector<std::uint8_t> syndrome(std::span<const std::uint8_t> word) const;
    bool syndrome_is_zero(std::span<const std::uint8_t> word) const;

    bool operator==(const ParityCheckMatrix& other) const {
        return cols_ == other.cols_ && row_support_ == other.row_support_;
    }

private:
    std::size_t cols_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::vector<std::uint32_t>> row_support_;
    std::vector<std::vector<std::uint32_t>> col_support_;
};

/// Standard alist text: "N M", max weights, per-column and per-row weights,
/// then 1-based index lists padded with zeros to the maxima.
std::string export_alist(const ParityCheckMatrix& H);
/// Accepts both zero-padded and unpadded alist files; validates counts,
/// ranges and duplicate indices.
ParityCheckMatrix import_alist(const std::string& text);

/// Number of differing positions; throws on length mismatch.
std::size_t hamming_distance(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

}  // namespace ildpc
