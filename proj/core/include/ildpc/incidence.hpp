#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ildpc/fields.hpp"
#include "ildpc/rings.hpp"

namespace ildpc {

enum class Family { field, ring };
enum class ComponentSelection { all, largest };

/// A point (a, b, c): a and c are indices into the small domain
/// ([0, base)), b is an element of the big domain ([0, base^2)).
/// For the field family the small domain is the canonical ordering of the
/// subfield; for the ring family index and residue coincide.
struct Point {
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// A line [x, y, z]: x and y in the big domain, z a small-domain index.
struct Line {
    int x = 0;
    int y = 0;
    int z = 0;
    friend bool operator==(const Line&, const Line&) = default;
};

/// Arithmetic backend for one graph family; immutable and cheap to share.
class System {
public:
    static System field(int q);
    static System ring(std::int64_t n);

    Family family() const { return family_; }
    int base() const { return base_; }
    int big_size() const { return base_ * base_; }

    /// Element of the big domain representing small-domain index s.
    int small_as_big(int s) const;

    bool incident(const Point& p, const Line& l) const;
    /// The unique line through p with the given x coordinate.
    Line line_through(const Point& p, int x) const;
    /// The unique point on l with the given small coordinate a.
    Point point_on(const Line& l, int a) const;

    const FieldCtx* field_ctx() const { return field_.get(); }
    const RingCtx* ring_ctx() const { return ring_.get(); }

private:
    System() = default;
    void check_point(const Point& p) const;
    void check_line(const Line& l) const;

    Family family_ = Family::ring;
    int base_ = 0;
    std::shared_ptr<const FieldCtx> field_;
    std::shared_ptr<const RingCtx> ring_;
};

/// Recipe for a graph: family, base, optional line restriction (a subset of
/// the big domain for the x coordinate), and component selection.
struct GraphSpec {
    Family family = Family::ring;
    int base = 2;
    std::optional<std::vector<int>> restriction;  // x encodings, ascending
    ComponentSelection component = ComponentSelection::all;
};

struct GraphBuildOptions {
    std::uint64_t max_edges = std::uint64_t{1} << 26;
};

/// Bipartite point/line incidence graph. Vertex ids are
/// [0, num_points) for points and [num_points, num_points + num_lines)
/// for lines. Immutable after construction.
class IncidenceGraph {
public:
    /// Full graph of the family, then restriction, then component selection,
    /// as requested by the spec. Degree structure: every point has one
    /// incident line per admissible x, every line has one incident point per
    /// small-domain value.
    static IncidenceGraph build(const GraphSpec& spec, const GraphBuildOptions& opts = {});

    /// Synthetic graph from explicit adjacency (test fixtures, imported
    /// Tanner graphs). point_at/line_at are unavailable on these.
    static IncidenceGraph from_adjacency(std::size_t num_points, std::size_t num_lines,
                                         std::vector<std::vector<std::uint32_t>> point_adj);

    const GraphSpec& spec() const { return spec_; }
    const System* system() const { return sys_ ? &*sys_ : nullptr; }

    std::size_t num_points() const { return point_keys_.size(); }
    std::size_t num_lines() const { return line_keys_.size(); }
    std::size_t num_vertices() const { return num_points() + num_lines(); }
    std::size_t num_edges() const { return num_edges_; }

    /// Per-point sorted list of incident line indices.
    const std::vector<std::vector<std::uint32_t>>& point_adjacency() const { return adj_; }
    /// Per-line incident point indices, derived from the point adjacency.
    std::vector<std::vector<std::uint32_t>> line_adjacency() const;
    std::vector<std::uint32_t> line_degrees() const;

    Point point_at(std::uint32_t idx) const;
    Line line_at(std::uint32_t idx) const;

    /// Full-family mixed-radix keys of the retained points/lines.
    const std::vector<std::uint32_t>& point_keys() const { return point_keys_; }
    const std::vector<std::uint32_t>& line_keys() const { return line_keys_; }

    friend IncidenceGraph restrict_lines(const IncidenceGraph& g, std::vector<int> restriction);
    friend IncidenceGraph component_subgraph(const IncidenceGraph& g,
                                             const std::vector<std::uint32_t>& component);

private:
    IncidenceGraph() = default;

    std::optional<System> sys_;
    GraphSpec spec_;
    std::vector<std::uint32_t> point_keys_;
    std::vector<std::uint32_t> line_keys_;
    std::vector<std::vector<std::uint32_t>> adj_;
    std::size_t num_edges_ = 0;
};

/// Mixed-radix vertex keys for the unrestricted graph of a system.
std::uint32_t point_key(const System& sys, const Point& p);
std::uint32_t line_key(const System& sys, const Line& l);
Point point_from_key(const System& sys, std::uint32_t key);
Line line_from_key(const System& sys, std::uint32_t key);

/// Keeps exactly the lines whose x coordinate is in `restriction`
/// (encodings, deduplicated and sorted internally); keeps all points.
IncidenceGraph restrict_lines(const IncidenceGraph& g, std::vector<int> restriction);

/// Connected components as lists of vertex ids, sorted by descending size
/// and then by smallest contained vertex id; each component's ids ascend.
std::vector<std::vector<std::uint32_t>> connected_components(const IncidenceGraph& g);

/// Induced subgraph on one component (as returned by connected_components).
IncidenceGraph component_subgraph(const IncidenceGraph& g,
                                  const std::vector<std::uint32_t>& component);

/// The first r big-domain values in canonical (ascending) order.
std::vector<int> canonical_restriction(const System& sys, int r);

/// Graph persistence: the GraphSpec as a small JSON document (edges are
/// always recomputable from it).
std::string graph_spec_to_json(const GraphSpec& spec);
GraphSpec graph_spec_from_json(const std::string& text);

}  // namespace ildpc
