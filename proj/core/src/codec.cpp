#include "ildpc/codec.hpp"

#include <cstdio>

namespace ildpc {

double design_rate_full(int base) { return static_cast<double>(base - 1) / base; }

double design_rate_restricted(int base, int r) {
    return 1.0 - static_cast<double>(base) / static_cast<double>(r);
}

std::optional<double> design_rate_of(const GraphSpec& spec) {
    if (spec.component == ComponentSelection::largest) return std::nullopt;
    if (spec.restriction)
        return design_rate_restricted(spec.base, static_cast<int>(spec.restriction->size()));
    return design_rate_full(spec.base);
}

CodeSpec rate_report(const ParityCheckMatrix& H, std::optional<double> design_rate,
                     std::uint64_t max_dense_bits) {
    CodeSpec spec;
    spec.n = H.cols();
    spec.r_rows = H.rows();
    spec.rank = gf2_rank(H, max_dense_bits);
    spec.k = spec.n - spec.rank;
    spec.design_rate = design_rate;
    spec.true_rate = static_cast<double>(spec.k) / static_cast<double>(spec.n);
    spec.rank_deficient = spec.rank < spec.r_rows;
    return spec;
}

CodeSpec rate_report(const IncidenceGraph& g, std::uint64_t max_dense_bits) {
    return rate_report(ParityCheckMatrix::from_graph(g), design_rate_of(g.spec()), max_dense_bits);
}

std::string code_spec_to_text(const CodeSpec& spec) {
    char buf[128];
    std::string out;
    out += "N: " + std::to_string(spec.n) + "\n";
    out += "checks: " + std::to_string(spec.r_rows) + "\n";
    out += "rank: " + std::to_string(spec.rank) + "\n";
    out += "K: " + std::to_string(spec.k) + "\n";
    if (spec.design_rate) {
        std::snprintf(buf, sizeof(buf), "design_rate: %.6g\n", *spec.design_rate);
        out += buf;
    } else {
        out += "design_rate: n/a\n";
    }
    std::snprintf(buf, sizeof(buf), "true_rate: %.6g\n", spec.true_rate);
    out += buf;
    if (spec.rank_deficient)
        out += "note: rank < checks; K exceeds N - checks by " +
               std::to_string(spec.r_rows - spec.rank) + "\n";
    return out;
}

}  // namespace ildpc
