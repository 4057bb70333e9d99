#include "ildpc/incidence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ildpc {

System System::field(int q) {
    System s;
    s.family_ = Family::field;
    s.field_ = std::make_shared<FieldCtx>(FieldCtx::build(q));
    s.base_ = q;
    return s;
}

System System::ring(std::int64_t n) {
    System s;
    s.family_ = Family::ring;
    s.ring_ = std::make_shared<RingCtx>(RingCtx::build(n));
    s.base_ = static_cast<int>(n);
    return s;
}

int System::small_as_big(int s) const {
    if (s < 0 || s >= base_) throw std::invalid_argument("small coordinate out of range");
    return family_ == Family::field ? field_->subfield_elements()[static_cast<std::size_t>(s)] : s;
}

void System::check_point(const Point& p) const {
    if (p.a < 0 || p.a >= base_ || p.c < 0 || p.c >= base_ || p.b < 0 || p.b >= big_size())
        throw std::invalid_argument("point coordinates out of range");
}

void System::check_line(const Line& l) const {
    if (l.x < 0 || l.x >= big_size() || l.y < 0 || l.y >= big_size() || l.z < 0 || l.z >= base_)
        throw std::invalid_argument("line coordinates out of range");
}

namespace {

// Second incidence relation of the field family, in the affine generalized
// quadrangle form z - c = a*x^(q+1) + b*x^q + b^q*x. The first summand is
// a*N(x), the other two add up to Tr(b*x^q), so the value lies in the
// subfield.
//
// The superficially similar z - c = a*(y + y^q) only reaches girth 6:
// y + y^q vanishes on the trace-zero line of F_{q^2}, which admits
// triangles such as (0,0,0), (1,0,0), (2,2t,0) joined by [0,0,0], [t,t,0],
// [2t,0,0] over F_9. With the norm form, points with a1 != a2 on a common
// line satisfy c1 - c2 = (a1 - a2)*N(x); a triangle would need a root of
// s*l^2 - w*l + r over F_q whose discriminant (u*v^q - u^q*v)^2 is a
// nonsquare except in configurations that collapse to a single line.
int field_z_term(const FieldCtx& F, int a_el, int b, int x) {
    const int xq = F.frobenius(x);
    return F.add(F.mul(a_el, F.mul(x, xq)),
                 F.add(F.mul(b, xq), F.mul(F.frobenius(b), x)));
}

}  // namespace

bool System::incident(const Point& p, const Line& l) const {
    check_point(p);
    check_line(l);
    if (family_ == Family::field) {
        const FieldCtx& F = *field_;
        const int a = F.subfield_elements()[static_cast<std::size_t>(p.a)];
        const int c = F.subfield_elements()[static_cast<std::size_t>(p.c)];
        const int z = F.subfield_elements()[static_cast<std::size_t>(l.z)];
        if (F.sub(l.y, p.b) != F.mul(a, l.x)) return false;
        return F.sub(z, c) == field_z_term(F, a, p.b, l.x);
    }
    const RingCtx& R = *ring_;
    if (R.mod_n2(l.y - p.b) != R.mod_n2(static_cast<std::int64_t>(p.a) * l.x)) return false;
    return R.mod_n(l.z - p.c) ==
           R.mod_n(static_cast<std::int64_t>(p.a) * l.y + static_cast<std::int64_t>(p.a) * R.pow_n(l.y));
}

Line System::line_through(const Point& p, int x) const {
    check_point(p);
    if (x < 0 || x >= big_size()) throw std::invalid_argument("line x coordinate out of range");
    if (family_ == Family::field) {
        const FieldCtx& F = *field_;
        const int a = F.subfield_elements()[static_cast<std::size_t>(p.a)];
        const int c = F.subfield_elements()[static_cast<std::size_t>(p.c)];
        const int y = F.add(p.b, F.mul(a, x));
        const int z = F.add(c, field_z_term(F, a, p.b, x));
        return Line{x, y, F.subfield_index(z)};
    }
    const RingCtx& R = *ring_;
    const std::int64_t y = R.mod_n2(p.b + static_cast<std::int64_t>(p.a) * x);
    const std::int64_t z =
        R.mod_n(p.c + static_cast<std::int64_t>(p.a) * y + static_cast<std::int64_t>(p.a) * R.pow_n(y));
    return Line{x, static_cast<int>(y), static_cast<int>(z)};
}

Point System::point_on(const Line& l, int a) const {
    check_line(l);
    if (a < 0 || a >= base_) throw std::invalid_argument("point a coordinate out of range");
    if (family_ == Family::field) {
        const FieldCtx& F = *field_;
        const int a_el = F.subfield_elements()[static_cast<std::size_t>(a)];
        const int z = F.subfield_elements()[static_cast<std::size_t>(l.z)];
        const int b = F.sub(l.y, F.mul(a_el, l.x));
        const int c = F.sub(z, field_z_term(F, a_el, b, l.x));
        return Point{a, b, F.subfield_index(c)};
    }
    const RingCtx& R = *ring_;
    const std::int64_t b = R.mod_n2(l.y - static_cast<std::int64_t>(a) * l.x);
    const std::int64_t c =
        R.mod_n(l.z - static_cast<std::int64_t>(a) * l.y - static_cast<std::int64_t>(a) * R.pow_n(l.y));
    return Point{a, static_cast<int>(b), static_cast<int>(c)};
}

std::uint32_t point_key(const System& sys, const Point& p) {
    const std::uint32_t q = static_cast<std::uint32_t>(sys.base());
    return (static_cast<std::uint32_t>(p.a) * q * q + static_cast<std::uint32_t>(p.b)) * q +
           static_cast<std::uint32_t>(p.c);
}

std::uint32_t line_key(const System& sys, const Line& l) {
    const std::uint32_t q = static_cast<std::uint32_t>(sys.base());
    return (static_cast<std::uint32_t>(l.x) * q * q + static_cast<std::uint32_t>(l.y)) * q +
           static_cast<std::uint32_t>(l.z);
}

Point point_from_key(const System& sys, std::uint32_t key) {
    const std::uint32_t q = static_cast<std::uint32_t>(sys.base());
    Point p;
    p.c = static_cast<int>(key % q);
    key /= q;
    p.b = static_cast<int>(key % (q * q));
    p.a = static_cast<int>(key / (q * q));
    return p;
}

Line line_from_key(const System& sys, std::uint32_t key) {
    const std::uint32_t q = static_cast<std::uint32_t>(sys.base());
    Line l;
    l.z = static_cast<int>(key % q);
    key /= q;
    l.y = static_cast<int>(key % (q * q));
    l.x = static_cast<int>(key / (q * q));
    return l;
}

std::vector<int> canonical_restriction(const System& sys, int r) {
    if (r < 1 || r > sys.big_size())
        throw std::invalid_argument("restriction size r = " + std::to_string(r) +
                                    " out of range [1, base^2]");
    std::vector<int> xs(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) xs[static_cast<std::size_t>(i)] = i;
    return xs;
}

namespace {

std::vector<int> validate_restriction(const System& sys, std::vector<int> xs) {
    if (xs.empty()) throw std::invalid_argument("restriction subset is empty");
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw std::invalid_argument("restriction subset has duplicate members");
    if (xs.front() < 0 || xs.back() >= sys.big_size())
        throw std::invalid_argument("restriction member outside the x domain");
    return xs;
}

}  // namespace

IncidenceGraph IncidenceGraph::build(const GraphSpec& spec, const GraphBuildOptions& opts) {
    System sys = spec.family == Family::field ? System::field(spec.base)
                                              : System::ring(spec.base);
    const std::uint64_t b = static_cast<std::uint64_t>(spec.base);
    if (b > 1024)
        throw std::invalid_argument("graph base " + std::to_string(spec.base) + " too large");
    const std::uint64_t full_edges = b * b * b * b * b * b;
    if (full_edges > opts.max_edges)
        throw std::invalid_argument("graph with base " + std::to_string(spec.base) + " has " +
                                    std::to_string(full_edges) + " edges, over the budget of " +
                                    std::to_string(opts.max_edges));

    const std::size_t num_points = static_cast<std::size_t>(b * b * b * b);
    const std::size_t num_lines = static_cast<std::size_t>(b * b * b * b * b);
    const int big = sys.big_size();

    IncidenceGraph g;
    g.sys_ = sys;
    g.spec_ = spec;
    g.spec_.restriction.reset();
    g.spec_.component = ComponentSelection::all;
    g.point_keys_.resize(num_points);
    for (std::size_t i = 0; i < num_points; ++i) g.point_keys_[i] = static_cast<std::uint32_t>(i);
    g.line_keys_.resize(num_lines);
    for (std::size_t i = 0; i < num_lines; ++i) g.line_keys_[i] = static_cast<std::uint32_t>(i);

    g.adj_.resize(num_points);
    for (std::size_t i = 0; i < num_points; ++i) {
        const Point p = point_from_key(sys, static_cast<std::uint32_t>(i));
        auto& row = g.adj_[i];
        row.reserve(static_cast<std::size_t>(big));
        for (int x = 0; x < big; ++x) row.push_back(line_key(sys, sys.line_through(p, x)));
    }
    g.num_edges_ = num_points * static_cast<std::size_t>(big);

    if (spec.restriction) {
        g = restrict_lines(g, *spec.restriction);
    }
    if (spec.component == ComponentSelection::largest) {
        const auto comps = connected_components(g);
        g = component_subgraph(g, comps.front());
        g.spec_.component = ComponentSelection::largest;
    }
    return g;
}

IncidenceGraph IncidenceGraph::from_adjacency(std::size_t num_points, std::size_t num_lines,
                                              std::vector<std::vector<std::uint32_t>> point_adj) {
    if (point_adj.size() != num_points)
        throw std::invalid_argument("adjacency size does not match point count");
    IncidenceGraph g;
    g.point_keys_.resize(num_points);
    for (std::size_t i = 0; i < num_points; ++i) g.point_keys_[i] = static_cast<std::uint32_t>(i);
    g.line_keys_.resize(num_lines);
    for (std::size_t i = 0; i < num_lines; ++i) g.line_keys_[i] = static_cast<std::uint32_t>(i);
    g.num_edges_ = 0;
    for (auto& row : point_adj) {
        std::sort(row.begin(), row.end());
        for (const auto l : row)
            if (l >= num_lines) throw std::invalid_argument("adjacency line index out of range");
        g.num_edges_ += row.size();
    }
    g.adj_ = std::move(point_adj);
    return g;
}

std::vector<std::vector<std::uint32_t>> IncidenceGraph::line_adjacency() const {
    std::vector<std::vector<std::uint32_t>> lines(num_lines());
    const auto degs = line_degrees();
    for (std::size_t l = 0; l < lines.size(); ++l) lines[l].reserve(degs[l]);
    for (std::size_t p = 0; p < adj_.size(); ++p)
        for (const auto l : adj_[p]) lines[l].push_back(static_cast<std::uint32_t>(p));
    return lines;
}

std::vector<std::uint32_t> IncidenceGraph::line_degrees() const {
    std::vector<std::uint32_t> degs(num_lines(), 0);
    for (const auto& row : adj_)
        for (const auto l : row) ++degs[l];
    return degs;
}

Point IncidenceGraph::point_at(std::uint32_t idx) const {
    if (!sys_) throw std::logic_error("synthetic graph has no coordinate system");
    return point_from_key(*sys_, point_keys_.at(idx));
}

Line IncidenceGraph::line_at(std::uint32_t idx) const {
    if (!sys_) throw std::logic_error("synthetic graph has no coordinate system");
    return line_from_key(*sys_, line_keys_.at(idx));
}

IncidenceGraph restrict_lines(const IncidenceGraph& g, std::vector<int> restriction) {
    if (!g.sys_) throw std::logic_error("cannot restrict a synthetic graph");
    const System& sys = *g.sys_;
    const auto xs = validate_restriction(sys, std::move(restriction));

    std::vector<char> keep_x(static_cast<std::size_t>(sys.big_size()), 0);
    for (const int x : xs) keep_x[static_cast<std::size_t>(x)] = 1;

    IncidenceGraph out;
    out.sys_ = g.sys_;
    out.spec_ = g.spec_;
    out.spec_.restriction = xs;

    out.point_keys_ = g.point_keys_;
    std::vector<std::uint32_t> remap(g.num_lines(), UINT32_MAX);
    for (std::size_t l = 0; l < g.num_lines(); ++l) {
        const Line line = line_from_key(sys, g.line_keys_[l]);
        if (keep_x[static_cast<std::size_t>(line.x)]) {
            remap[l] = static_cast<std::uint32_t>(out.line_keys_.size());
            out.line_keys_.push_back(g.line_keys_[l]);
        }
    }
    out.adj_.resize(g.num_points());
    out.num_edges_ = 0;
    for (std::size_t p = 0; p < g.num_points(); ++p) {
        for (const auto l : g.adj_[p])
            if (remap[l] != UINT32_MAX) out.adj_[p].push_back(remap[l]);
        out.num_edges_ += out.adj_[p].size();
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> connected_components(const IncidenceGraph& g) {
    const std::size_t P = g.num_points();
    const std::size_t V = g.num_vertices();
    const auto line_adj = g.line_adjacency();
    const auto& point_adj = g.point_adjacency();

    std::vector<char> seen(V, 0);
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<std::uint32_t> queue;
    for (std::size_t root = 0; root < V; ++root) {
        if (seen[root]) continue;
        std::vector<std::uint32_t> comp;
        queue.clear();
        queue.push_back(static_cast<std::uint32_t>(root));
        seen[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            comp.push_back(v);
            if (v < P) {
                for (const auto l : point_adj[v]) {
                    const std::uint32_t id = static_cast<std::uint32_t>(P + l);
                    if (!seen[id]) {
                        seen[id] = 1;
                        queue.push_back(id);
                    }
                }
            } else {
                for (const auto p : line_adj[v - P]) {
                    if (!seen[p]) {
                        seen[p] = 1;
                        queue.push_back(p);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    return comps;
}

IncidenceGraph component_subgraph(const IncidenceGraph& g,
                                  const std::vector<std::uint32_t>& component) {
    const std::size_t P = g.num_points();
    std::vector<std::uint32_t> points, lines;
    for (const auto v : component) {
        if (v < P)
            points.push_back(v);
        else
            lines.push_back(static_cast<std::uint32_t>(v - P));
    }
    std::sort(points.begin(), points.end());
    std::sort(lines.begin(), lines.end());

    std::vector<std::uint32_t> line_remap(g.num_lines(), UINT32_MAX);
    for (std::size_t i = 0; i < lines.size(); ++i) line_remap[lines[i]] = static_cast<std::uint32_t>(i);

    IncidenceGraph out;
    out.sys_ = g.sys_;
    out.spec_ = g.spec_;
    out.point_keys_.reserve(points.size());
    for (const auto p : points) out.point_keys_.push_back(g.point_keys_[p]);
    out.line_keys_.reserve(lines.size());
    for (const auto l : lines) out.line_keys_.push_back(g.line_keys_[l]);
    out.adj_.reserve(points.size());
    out.num_edges_ = 0;
    for (const auto p : points) {
        std::vector<std::uint32_t> row;
        row.reserve(g.point_adjacency()[p].size());
        for (const auto l : g.point_adjacency()[p]) {
            // all neighbours of a component member are in the component
            row.push_back(line_remap[l]);
        }
        out.num_edges_ += row.size();
        out.adj_.push_back(std::move(row));
    }
    return out;
}

}  // namespace ildpc
