#include "pcube/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pcube {

namespace {

bool sorted_contains(std::span<const Label> sorted, Label l)
{
    return std::binary_search(sorted.begin(), sorted.end(), l);
}

std::string describe_pair(int m, Label a, Label b)
{
    return "{" + a.to_bitstring(m) + ", " + b.to_bitstring(m) + "}";
}

void require_vertex(const CubeGraph& g, VertexId v)
{
    if (v >= g.size()) {
        throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(v) + " out of range");
    }
}

// Pair (u, v) of a connected label set for which u has no neighbor closer to v.
// Such a pair exists exactly when the induced subgraph of Q_m is not isometric.
std::optional<std::pair<Label, Label>> isometry_violation(std::span<const Label> sorted)
{
    for (Label u : sorted) {
        for (Label v : sorted) {
            if (u == v) continue;
            bool closer = false;
            for_each_coordinate(u ^ v, [&](int c) {
                if (!closer && sorted_contains(sorted, u.flipped(c))) closer = true;
            });
            if (!closer) return std::pair{u, v};
        }
    }
    return std::nullopt;
}

bool labels_connected(std::span<const Label> sorted, int m)
{
    if (sorted.empty()) return false;
    std::vector<char> seen(sorted.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t at = stack.back();
        stack.pop_back();
        for (int c = 0; c < m; ++c) {
            const Label nb = sorted[at].flipped(c);
            auto it = std::lower_bound(sorted.begin(), sorted.end(), nb);
            if (it == sorted.end() || *it != nb) continue;
            const auto idx = static_cast<std::size_t>(it - sorted.begin());
            if (!seen[idx]) {
                seen[idx] = 1;
                ++reached;
                stack.push_back(idx);
            }
        }
    }
    return reached == sorted.size();
}

} // namespace

// ---------------------------------------------------------------------------
// CoordinateMap

Label CoordinateMap::lift(Label compact) const
{
    Label out = fixed;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        out = out.with(kept[k], compact.has(static_cast<int>(k)));
    }
    return out;
}

Label CoordinateMap::project(Label source) const
{
    Label out;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        if (source.has(kept[k])) out = out.with(static_cast<int>(k), true);
    }
    return out;
}

int CoordinateMap::compact_index(int source_coord) const
{
    auto it = std::find(kept.begin(), kept.end(), source_coord);
    return it == kept.end() ? -1 : static_cast<int>(it - kept.begin());
}

// ---------------------------------------------------------------------------
// CubeGraph

CubeGraph::CubeGraph() : CubeGraph(0, {Label{}}) {}

CubeGraph::CubeGraph(int m, std::vector<Label> sorted_labels) : m_(m), labels_(std::move(sorted_labels))
{
    build_adjacency();
}

void CubeGraph::build_adjacency()
{
    offsets_.assign(labels_.size() + 1, 0);
    arcs_.clear();
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        offsets_[v] = arcs_.size();
        for (int c = 0; c < m_; ++c) {
            if (auto nb = find(labels_[v].flipped(c))) arcs_.push_back({*nb, c});
        }
    }
    offsets_[labels_.size()] = arcs_.size();
}

LabelCheck check_labels(int m, std::span<const Label> labels)
{
    std::vector<Label> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty()) return LabelCheck::Empty;
    if (!labels_connected(sorted, m)) return LabelCheck::NotConnected;
    if (isometry_violation(sorted)) return LabelCheck::NotIsometric;
    return LabelCheck::Ok;
}

CubeGraph CubeGraph::from_labels(int m, std::vector<Label> labels, CoordinateMap* remap)
{
    if (m < 0 || m > kMaxDimension) {
        throw Error(Errc::InvalidArgument, "universe size " + std::to_string(m) + " outside [0, 64]");
    }
    if (labels.empty()) throw Error(Errc::InvalidArgument, "empty label set");
    const Label universe = Label::full(m);
    for (Label l : labels) {
        if (!l.subset_of(universe)) {
            throw Error(Errc::InvalidArgument, "label wider than universe of size " + std::to_string(m));
        }
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    if (!labels_connected(labels, m)) {
        throw Error(Errc::NotConnected, "labels induce a disconnected subgraph of Q_" + std::to_string(m));
    }
    if (auto bad = isometry_violation(labels)) {
        throw Error(Errc::NotIsometric, "graph distance exceeds Hamming distance for " +
                                            describe_pair(m, bad->first, bad->second));
    }

    Label all_and = universe;
    Label all_or;
    for (Label l : labels) {
        all_and &= l;
        all_or |= l;
    }
    CoordinateMap map;
    map.source_dimension = m;
    map.fixed = all_and;
    for (int c = 0; c < m; ++c) {
        if (all_or.has(c) && !all_and.has(c)) map.kept.push_back(c);
    }
    const int compact_m = static_cast<int>(map.kept.size());
    if (compact_m != m) {
        for (Label& l : labels) l = map.project(l);
        std::sort(labels.begin(), labels.end());
    }
    if (remap) *remap = map;
    return CubeGraph(compact_m, std::move(labels));
}

std::optional<VertexId> CubeGraph::find(Label l) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l) return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

VertexId CubeGraph::at(Label l) const
{
    if (auto v = find(l)) return *v;
    throw Error(Errc::UnknownVertex, "no vertex labeled " + l.to_bitstring(m_));
}

std::vector<Edge> CubeGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < size(); ++u) {
        for (const Arc& a : neighbors(u)) {
            if (!labels_[u].has(a.coord)) out.push_back({u, a.to, a.coord});
        }
    }
    return out;
}

VertexSet CubeGraph::all_vertices() const
{
    VertexSet s(size());
    std::iota(s.begin(), s.end(), VertexId{0});
    return s;
}

std::vector<Label> CubeGraph::labels_of(const VertexSet& s) const
{
    std::vector<Label> out;
    out.reserve(s.size());
    for (VertexId v : s) out.push_back(labels_[v]);
    return out;
}

VertexSet CubeGraph::vertex_set(std::span<const Label> ls) const
{
    VertexSet out;
    out.reserve(ls.size());
    for (Label l : ls) out.push_back(at(l));
    return make_set(std::move(out));
}

Subgraph induced_subgraph(const CubeGraph& g, const VertexSet& s)
{
    Subgraph out;
    out.graph = CubeGraph::from_labels(g.dimension(), g.labels_of(s), &out.map);
    return out;
}

// ---------------------------------------------------------------------------
// Theta classes and regions

ThetaClass theta_class(const CubeGraph& g, int coord)
{
    if (coord < 0 || coord >= g.dimension()) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " not in graph");
    }
    ThetaClass t;
    t.index = coord;
    for (VertexId v = 0; v < g.size(); ++v) {
        const bool pos = g.label(v).has(coord);
        (pos ? t.positive : t.negative).push_back(v);
        if (auto nb = g.find(g.label(v).flipped(coord))) {
            (pos ? t.positive_boundary : t.negative_boundary).push_back(v);
            if (!pos) t.edges.push_back({v, *nb, coord});
        }
    }
    return t;
}

std::vector<ThetaClass> theta_classes(const CubeGraph& g)
{
    std::vector<ThetaClass> out;
    out.reserve(static_cast<std::size_t>(g.dimension()));
    for (int c = 0; c < g.dimension(); ++c) out.push_back(theta_class(g, c));
    return out;
}

VertexSet halfspace(const CubeGraph& g, int coord, bool positive)
{
    if (coord < 0 || coord >= g.dimension()) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " not in graph");
    }
    VertexSet out;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (g.label(v).has(coord) == positive) out.push_back(v);
    }
    return out;
}

Sign Region::sign(int coord) const
{
    if (!fixed_.has(coord)) return Sign::Both;
    return values_.has(coord) ? Sign::Plus : Sign::Minus;
}

void Region::set(int coord, Sign s)
{
    if (coord < 0 || coord >= m_) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " outside region");
    }
    fixed_ = fixed_.with(coord, s != Sign::Both);
    values_ = values_.with(coord, s == Sign::Plus);
}

VertexSet select(const CubeGraph& g, const Region& r)
{
    VertexSet out;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (r.admits(g.label(v))) out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Metric machinery

int distance(const CubeGraph& g, VertexId u, VertexId v)
{
    require_vertex(g, u);
    require_vertex(g, v);
    return g.distance(u, v);
}

VertexSet interval(const CubeGraph& g, VertexId u, VertexId v)
{
    require_vertex(g, u);
    require_vertex(g, v);
    const Label lu = g.label(u);
    const Label agree = (lu ^ g.label(v)).complement(g.dimension());
    VertexSet out;
    for (VertexId w = 0; w < g.size(); ++w) {
        if (((g.label(w) ^ lu) & agree).empty()) out.push_back(w);
    }
    return out;
}

Hull convex_hull(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty()) throw Error(Errc::InvalidArgument, "convex hull of an empty set");
    for (VertexId v : s) require_vertex(g, v);
    Label all_and = Label::full(g.dimension());
    Label all_or;
    for (VertexId v : s) {
        all_and &= g.label(v);
        all_or |= g.label(v);
    }
    const Label crossed = all_or & all_and.complement(g.dimension());
    Hull h{Region(g.dimension()), {}};
    for (int c = 0; c < g.dimension(); ++c) {
        if (crossed.has(c)) continue;
        h.region.set(c, all_and.has(c) ? Sign::Plus : Sign::Minus);
    }
    h.vertices = select(g, h.region);
    return h;
}

bool is_convex(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty()) return true;
    return convex_hull(g, s).vertices.size() == s.size();
}

bool is_isometric(const CubeGraph& g, const VertexSet& s)
{
    std::vector<char> in(g.size(), 0);
    for (VertexId v : s) {
        require_vertex(g, v);
        in[v] = 1;
    }
    // In an induced subgraph of a hypercube, isometry is equivalent to every
    // vertex having an in-set neighbor one step closer to every other vertex.
    for (VertexId u : s) {
        for (VertexId v : s) {
            if (u == v) continue;
            const Label diff = g.label(u) ^ g.label(v);
            bool closer = false;
            for (const Arc& a : g.neighbors(u)) {
                if (in[a.to] && diff.has(a.coord)) {
                    closer = true;
                    break;
                }
            }
            if (!closer) return false;
        }
    }
    return true;
}

bool is_connected(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty()) return false;
    std::vector<char> in(g.size(), 0), seen(g.size(), 0);
    for (VertexId v : s) in[v] = 1;
    std::vector<VertexId> stack{s.front()};
    seen[s.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const VertexId at = stack.back();
        stack.pop_back();
        for (const Arc& a : g.neighbors(at)) {
            if (in[a.to] && !seen[a.to]) {
                seen[a.to] = 1;
                ++reached;
                stack.push_back(a.to);
            }
        }
    }
    return reached == s.size();
}

std::optional<VertexId> gate(const CubeGraph& g, VertexId v, const VertexSet& s)
{
    require_vertex(g, v);
    if (s.empty()) return std::nullopt;
    // A gate is the unique nearest vertex of s.
    int best = kMaxDimension + 1;
    std::optional<VertexId> nearest;
    bool tie = false;
    for (VertexId x : s) {
        const int d = g.distance(v, x);
        if (d < best) {
            best = d;
            nearest = x;
            tie = false;
        } else if (d == best) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;
    for (VertexId y : s) {
        if (best + g.distance(*nearest, y) != g.distance(v, y)) return std::nullopt;
    }
    return nearest;
}

bool is_gated(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty()) return false;
    std::vector<char> in(g.size(), 0);
    for (VertexId x : s) in[x] = 1;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (!in[v] && !gate(g, v, s)) return false;
    }
    return true;
}

VertexSet gated_hull(const CubeGraph& g, const VertexSet& s, GatedHullOptions opts)
{
    const Hull hull = convex_hull(g, s);
    std::vector<int> free_classes;
    for (int c = 0; c < g.dimension(); ++c) {
        if (hull.region.sign(c) != Sign::Both) free_classes.push_back(c);
    }
    const auto k = free_classes.size();
    if (k >= 63 || (std::uint64_t{1} << k) > opts.budget) {
        throw Error(Errc::TooManyFreeClasses,
                    std::to_string(k) + " classes avoid the hull; enumeration exceeds the budget");
    }
    // Candidate supersets keep a subset R of the fixed classes. Gated sets are
    // closed under intersection, so the union of all gated R is itself gated
    // and gives the smallest gated superset.
    Label best_keep;
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << k); ++r) {
        Region region(g.dimension());
        Label keep;
        for (std::size_t b = 0; b < k; ++b) {
            if ((r >> b) & 1u) {
                region.set(free_classes[b], hull.region.sign(free_classes[b]));
                keep = keep.with(free_classes[b], true);
            }
        }
        if (keep.subset_of(best_keep)) continue;
        if (is_gated(g, select(g, region))) best_keep |= keep;
    }
    Region region(g.dimension());
    for_each_coordinate(best_keep, [&](int c) { region.set(c, hull.region.sign(c)); });
    return select(g, region);
}

// ---------------------------------------------------------------------------
// Set helpers

VertexSet set_union(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b)
{
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

bool set_includes(const VertexSet& outer, const VertexSet& inner)
{
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

VertexSet make_set(std::vector<VertexId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

} // namespace pcube
