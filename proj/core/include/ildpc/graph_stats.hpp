#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ildpc/incidence.hpp"

namespace ildpc {

class ParityCheckMatrix;

/// Exact nonnegative rational, always stored reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& r, int significant_digits);
/// True iff r equals `displayed` after rounding to `decimals` places.
bool matches_rounded(const Rational& r, double displayed, int decimals);

struct GirthResult {
    bool acyclic = false;
    bool exact = true;   // false for sampled mode: value is an upper bound
    std::size_t value = 0;  // valid when !acyclic
};

struct BiDegree {
    std::uint32_t line_degree = 0;
    std::uint32_t point_degree = 0;
    friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

struct GraphStats {
    std::size_t num_points = 0;
    std::size_t num_lines = 0;
    std::size_t num_edges = 0;
    std::optional<BiDegree> bidegree;              // empty if irregular
    std::vector<std::uint32_t> irregular_vertices; // offenders when irregular
    Rational density;
    std::optional<GirthResult> girth;              // present when requested
};

/// Exact girth by BFS from every vertex (shortest cycle through each root,
/// minimised over roots).
GirthResult girth(const IncidenceGraph& g);
/// Upper bound from BFS over the first `num_roots` vertices only.
GirthResult girth_sampled(const IncidenceGraph& g, std::size_t num_roots);

/// 2|E| / (|V| (|V|-1)); throws for |V| < 2.
Rational density(const IncidenceGraph& g);

/// (line degree, point degree) when both sides are regular; otherwise empty,
/// with every offending vertex id appended to *offenders (when non-null).
std::optional<BiDegree> check_biregular(const IncidenceGraph& g,
                                        std::vector<std::uint32_t>* offenders = nullptr);

/// True iff two rows of H share at least two columns (a 4-cycle in the
/// Tanner graph).
bool has_four_cycle(const ParityCheckMatrix& H);

enum class GirthMode { none, exact, sampled };

GraphStats analyze_graph(const IncidenceGraph& g, GirthMode mode = GirthMode::none,
                         std::size_t sample_roots = 64);

std::string stats_to_text(const GraphStats& s);
std::string stats_to_json(const GraphStats& s);

}  // namespace ildpc
