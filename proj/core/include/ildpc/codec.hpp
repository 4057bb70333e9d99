#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ildpc/gf2.hpp"
#include "ildpc/incidence.hpp"
#include "ildpc/parity_check.hpp"

namespace ildpc {

/// Code parameters of a parity-check matrix. k is defined from the actual
/// GF(2) rank, not from the row count; `design_rate` carries the closed-form
/// rate of the construction when one applies.
struct CodeSpec {
    std::size_t n = 0;
    std::size_t r_rows = 0;
    std::size_t rank = 0;
    std::size_t k = 0;              // n - rank
    std::optional<double> design_rate;
    double true_rate = 0.0;         // k / n
    bool rank_deficient = false;    // rank < r_rows, so true_rate > (n - r_rows)/n
};

/// (base-1)/base: full-graph construction.
double design_rate_full(int base);
/// 1 - base/r: construction restricted to r line classes.
double design_rate_restricted(int base, int r);
/// Design rate implied by a graph spec, when the graph is unmodified by
/// component selection (full or restricted construction).
std::optional<double> design_rate_of(const GraphSpec& spec);

CodeSpec rate_report(const ParityCheckMatrix& H, std::optional<double> design_rate,
                     std::uint64_t max_dense_bits = std::uint64_t{1} << 31);
CodeSpec rate_report(const IncidenceGraph& g,
                     std::uint64_t max_dense_bits = std::uint64_t{1} << 31);

std::string code_spec_to_text(const CodeSpec& spec);

}  // namespace ildpc
