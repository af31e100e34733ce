#ifndef PCUBE_CORE_HPP
#define PCUBE_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pcube/error.hpp"
#include "pcube/label.hpp"

namespace pcube {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids. Since a graph keeps its labels
/// sorted, a sorted id list is also sorted by label.
using VertexSet = std::vector<VertexId>;

struct Arc {
    VertexId to;
    int coord;
};

struct Edge {
    VertexId u;  // endpoint with coordinate `coord` unset
    VertexId v;
    int coord;
};

/// Relates a compacted universe to the universe it was cut from: coordinate
/// `k` of the compacted labels is coordinate `kept[k]` of the source, and all
/// dropped source coordinates take their value from `fixed`.
struct CoordinateMap {
    int source_dimension = 0;
    std::vector<int> kept;
    Label fixed;

    Label lift(Label compact) const;
    Label project(Label source) const;
    /// Compacted index of a source coordinate, or -1 if it was dropped.
    int compact_index(int source_coord) const;
};

/// A partial cube, stored by the hypercube labels of its vertices. Edges are
/// the label pairs at Hamming distance one. Every instance is connected,
/// isometric in Q_m and uses every coordinate on both sides.
class CubeGraph {
public:
    /// The one-vertex graph K_1.
    CubeGraph();

    /// Validates `labels` as a partial cube of Q_m. Coordinates on which all
    /// labels agree are dropped; `remap`, if given, receives the mapping.
    /// Throws Error{NotConnected} or Error{NotIsometric}.
    static CubeGraph from_labels(int m, std::vector<Label> labels, CoordinateMap* remap = nullptr);

    int dimension() const { return m_; }
    std::size_t size() const { return labels_.size(); }
    std::span<const Label> labels() const { return labels_; }
    Label label(VertexId v) const { return labels_[v]; }

    std::optional<VertexId> find(Label l) const;
    bool contains(Label l) const { return find(l).has_value(); }
    /// Throws Error{UnknownVertex}.
    VertexId at(Label l) const;

    std::span<const Arc> neighbors(VertexId v) const
    {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    std::size_t edge_count() const { return arcs_.size() / 2; }
    std::vector<Edge> edges() const;

    int distance(VertexId u, VertexId v) const { return hamming(labels_[u], labels_[v]); }

    VertexSet all_vertices() const;
    /// Labels of a vertex set, in the same (sorted) order.
    std::vector<Label> labels_of(const VertexSet& s) const;
    /// Throws Error{UnknownVertex} for any label not in the graph.
    VertexSet vertex_set(std::span<const Label> labels) const;

    friend bool operator==(const CubeGraph& a, const CubeGraph& b)
    {
        return a.m_ == b.m_ && a.labels_ == b.labels_;
    }

private:
    CubeGraph(int m, std::vector<Label> sorted_labels);
    void build_adjacency();

    int m_ = 0;
    std::vector<Label> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<Arc> arcs_;
};

/// The induced, compacted partial cube on an isometric vertex set of `g`.
struct Subgraph {
    CubeGraph graph;
    CoordinateMap map;
};

/// Throws Error{NotConnected}/Error{NotIsometric} if the set is not isometric.
Subgraph induced_subgraph(const CubeGraph& g, const VertexSet& s);

/// Checks that labels are a partial cube of Q_m without compacting; returns
/// the first failing condition instead of throwing.
enum class LabelCheck { Ok, Empty, NotConnected, NotIsometric };
LabelCheck check_labels(int m, std::span<const Label> labels);

// ---------------------------------------------------------------------------
// Theta classes and regions

struct ThetaClass {
    int index = 0;
    std::vector<Edge> edges;
    VertexSet negative;
    VertexSet positive;
    VertexSet negative_boundary;
    VertexSet positive_boundary;
};

/// Throws Error{UnknownCoordinate}.
ThetaClass theta_class(const CubeGraph& g, int coord);
std::vector<ThetaClass> theta_classes(const CubeGraph& g);

VertexSet halfspace(const CubeGraph& g, int coord, bool positive);

enum class Sign : std::uint8_t { Minus, Plus, Both };

/// An intersection of halfspaces: per coordinate either a fixed side or free.
class Region {
public:
    Region() = default;
    explicit Region(int m) : m_(m) {}

    int dimension() const { return m_; }
    Sign sign(int coord) const;
    void set(int coord, Sign s);
    /// Coordinates with a fixed side.
    Label fixed() const { return fixed_; }
    Label values() const { return values_; }
    bool admits(Label l) const { return ((l ^ values_) & fixed_).empty(); }

    friend bool operator==(const Region&, const Region&) = default;

private:
    int m_ = 0;
    Label fixed_;
    Label values_;
};

VertexSet select(const CubeGraph& g, const Region& r);

// ---------------------------------------------------------------------------
// Metric machinery

/// Throws Error{UnknownVertex} for out-of-range ids.
int distance(const CubeGraph& g, VertexId u, VertexId v);
VertexSet interval(const CubeGraph& g, VertexId u, VertexId v);

struct Hull {
    Region region;
    VertexSet vertices;
};

/// Smallest convex superset. Classes crossed by `s` are free in the region;
/// every other class is fixed to the side holding `s`.
Hull convex_hull(const CubeGraph& g, const VertexSet& s);
bool is_convex(const CubeGraph& g, const VertexSet& s);
bool is_isometric(const CubeGraph& g, const VertexSet& s);
bool is_connected(const CubeGraph& g, const VertexSet& s);

/// The gate of v in s, if any.
std::optional<VertexId> gate(const CubeGraph& g, VertexId v, const VertexSet& s);
bool is_gated(const CubeGraph& g, const VertexSet& s);

struct GatedHullOptions {
    std::uint64_t budget = std::uint64_t{1} << 20;
};

/// Smallest gated superset of s. Enumerates every way of keeping or releasing
/// the classes that do not cross conv(s); throws Error{TooManyFreeClasses} if
/// that exceeds the budget.
VertexSet gated_hull(const CubeGraph& g, const VertexSet& s, GatedHullOptions opts = {});

// ---------------------------------------------------------------------------
// Set helpers

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, VertexId v);
bool set_includes(const VertexSet& outer, const VertexSet& inner);
VertexSet make_set(std::vector<VertexId> ids);

} // namespace pcube

#endif
