#include "ildpc/graph_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ildpc/parity_check.hpp"
#include "json.hpp"

namespace ildpc {

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    return Rational{g ? num / g : num, g ? den / g : den};
}

std::string to_decimal(const Rational& r, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, r.value());
    return buf;
}

bool matches_rounded(const Rational& r, double displayed, int decimals) {
    long long pow10 = 1;
    for (int i = 0; i < decimals; ++i) pow10 *= 10;
    const long long scaled = r.num * pow10;  // callers keep num small
    const long long rounded = (2 * scaled + r.den) / (2 * r.den);
    return rounded == std::llround(displayed * static_cast<double>(pow10));
}

namespace {

// Unified neighbour access over point ids [0,P) and line ids [P,P+L).
struct BipartiteView {
    const std::vector<std::vector<std::uint32_t>>& padj;
    std::vector<std::vector<std::uint32_t>> ladj;
    std::size_t P;
    std::size_t V;

    explicit BipartiteView(const IncidenceGraph& g)
        : padj(g.point_adjacency()), ladj(g.line_adjacency()), P(g.num_points()), V(g.num_vertices()) {}

    template <typename Fn>
    void for_neighbours(std::uint32_t v, Fn&& fn) const {
        if (v < P) {
            for (const auto l : padj[v]) fn(static_cast<std::uint32_t>(P + l));
        } else {
            for (const auto p : ladj[v - P]) fn(p);
        }
    }
};

constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

// Shortest cycle detectable from this root; BFS is pruned once levels can no
// longer improve on `best`.
std::size_t shortest_cycle_from(const BipartiteView& view, std::uint32_t root, std::size_t best,
                                std::vector<std::uint32_t>& dist, std::vector<std::uint32_t>& parent,
                                std::vector<std::uint32_t>& order, std::uint32_t unvisited) {
    dist[root] = 0;
    parent[root] = root;
    order.clear();
    order.push_back(root);
    std::size_t found = kNoCycle;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::uint32_t u = order[head];
        if (best != kNoCycle && 2 * static_cast<std::size_t>(dist[u]) + 1 >= best) break;
        view.for_neighbours(u, [&](std::uint32_t w) {
            if (dist[w] == unvisited) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                order.push_back(w);
            } else if (w != parent[u]) {
                const std::size_t len = static_cast<std::size_t>(dist[u]) + dist[w] + 1;
                if (len < found) found = len;
            }
        });
        if (found < best) best = found;
    }
    for (const auto v : order) dist[v] = unvisited;
    return found;
}

GirthResult girth_over_roots(const IncidenceGraph& g, std::size_t num_roots, bool exact) {
    const BipartiteView view(g);
    constexpr std::uint32_t unvisited = UINT32_MAX;
    std::vector<std::uint32_t> dist(view.V, unvisited), parent(view.V, 0);
    std::vector<std::uint32_t> order;
    order.reserve(view.V);

    std::size_t best = kNoCycle;
    for (std::size_t root = 0; root < num_roots; ++root) {
        const std::size_t c =
            shortest_cycle_from(view, static_cast<std::uint32_t>(root), best, dist, parent, order, unvisited);
        if (c < best) best = c;
        if (best == 3) break;  // cannot improve further on simple graphs
    }
    GirthResult r;
    r.exact = exact;
    if (best == kNoCycle) {
        r.acyclic = true;
    } else {
        r.value = best;
    }
    return r;
}

}  // namespace

GirthResult girth(const IncidenceGraph& g) { return girth_over_roots(g, g.num_vertices(), true); }

GirthResult girth_sampled(const IncidenceGraph& g, std::size_t num_roots) {
    num_roots = std::min(num_roots, g.num_vertices());
    GirthResult r = girth_over_roots(g, num_roots, num_roots == g.num_vertices());
    return r;
}

Rational density(const IncidenceGraph& g) {
    const long long v = static_cast<long long>(g.num_vertices());
    if (v < 2) throw std::invalid_argument("density needs at least two vertices");
    return Rational::of(2 * static_cast<long long>(g.num_edges()), v * (v - 1));
}

std::optional<BiDegree> check_biregular(const IncidenceGraph& g,
                                        std::vector<std::uint32_t>* offenders) {
    const auto& padj = g.point_adjacency();
    const auto ldeg = g.line_degrees();

    auto majority = [](auto&& degrees_of, std::size_t count) {
        std::map<std::uint32_t, std::size_t> freq;
        for (std::size_t i = 0; i < count; ++i) ++freq[degrees_of(i)];
        std::uint32_t best_deg = 0;
        std::size_t best_count = 0;
        for (const auto& [deg, cnt] : freq)
            if (cnt > best_count) {
                best_deg = deg;
                best_count = cnt;
            }
        return best_deg;
    };

    const std::uint32_t pref =
        majority([&](std::size_t i) { return static_cast<std::uint32_t>(padj[i].size()); }, padj.size());
    const std::uint32_t lref = majority([&](std::size_t i) { return ldeg[i]; }, ldeg.size());

    bool regular = true;
    for (std::size_t i = 0; i < padj.size(); ++i) {
        if (padj[i].size() != pref) {
            regular = false;
            if (offenders) offenders->push_back(static_cast<std::uint32_t>(i));
        }
    }
    for (std::size_t i = 0; i < ldeg.size(); ++i) {
        if (ldeg[i] != lref) {
            regular = false;
            if (offenders) offenders->push_back(static_cast<std::uint32_t>(g.num_points() + i));
        }
    }
    if (!regular) return std::nullopt;
    return BiDegree{lref, pref};
}

bool has_four_cycle(const ParityCheckMatrix& H) {
    std::vector<std::uint64_t> pairs;
    for (std::size_t j = 0; j < H.cols(); ++j) {
        const auto& rows = H.col(j);
        for (std::size_t u = 0; u < rows.size(); ++u)
            for (std::size_t v = u + 1; v < rows.size(); ++v)
                pairs.push_back(static_cast<std::uint64_t>(rows[u]) * H.rows() + rows[v]);
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

GraphStats analyze_graph(const IncidenceGraph& g, GirthMode mode, std::size_t sample_roots) {
    GraphStats s;
    s.num_points = g.num_points();
    s.num_lines = g.num_lines();
    s.num_edges = g.num_edges();
    s.bidegree = check_biregular(g, &s.irregular_vertices);
    s.density = density(g);
    if (mode == GirthMode::exact)
        s.girth = girth(g);
    else if (mode == GirthMode::sampled)
        s.girth = girth_sampled(g, sample_roots);
    return s;
}

std::string stats_to_text(const GraphStats& s) {
    std::string out;
    out += "points: " + std::to_string(s.num_points) + "\n";
    out += "lines: " + std::to_string(s.num_lines) + "\n";
    out += "vertices: " + std::to_string(s.num_points + s.num_lines) + "\n";
    out += "edges: " + std::to_string(s.num_edges) + "\n";
    if (s.bidegree) {
        out += "bidegree: (" + std::to_string(s.bidegree->line_degree) + "," +
               std::to_string(s.bidegree->point_degree) + ")\n";
    } else {
        out += "bidegree: irregular (" + std::to_string(s.irregular_vertices.size()) +
               " offending vertices)\n";
    }
    out += "density: " + std::to_string(s.density.num) + "/" + std::to_string(s.density.den) +
           " ~ " + to_decimal(s.density, 3) + "\n";
    if (s.girth) {
        if (s.girth->acyclic)
            out += "girth: acyclic\n";
        else if (s.girth->exact)
            out += "girth: " + std::to_string(s.girth->value) + "\n";
        else
            out += "girth: <= " + std::to_string(s.girth->value) + " (sampled upper bound)\n";
    }
    return out;
}

std::string stats_to_json(const GraphStats& s) {
    nlohmann::json doc;
    doc["points"] = s.num_points;
    doc["lines"] = s.num_lines;
    doc["vertices"] = s.num_points + s.num_lines;
    doc["edges"] = s.num_edges;
    if (s.bidegree) {
        doc["bidegree"] = {s.bidegree->line_degree, s.bidegree->point_degree};
    } else {
        doc["bidegree"] = nullptr;
        doc["irregular_vertices"] = s.irregular_vertices;
    }
    doc["density"] = {{"num", s.density.num}, {"den", s.density.den},
                      {"decimal", to_decimal(s.density, 3)}};
    if (s.girth) {
        if (s.girth->acyclic)
            doc["girth"] = "acyclic";
        else
            doc["girth"] = s.girth->value;
        doc["girth_exact"] = s.girth->exact;
    }
    return doc.dump(2) + "\n";
}

}  // namespace ildpc
