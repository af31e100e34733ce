#include "pcube/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "pcube/completion.hpp"
#include "pcube/minors.hpp"

namespace pcube {

namespace {

void require_coordinate(const CubeGraph& g, int coord)
{
    if (coord < 0 || coord >= g.dimension()) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " not in graph");
    }
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows)
{
    std::size_t rank = 0;
    const std::size_t words = rows.empty() ? 0 : rows.front().size();
    for (std::size_t bit = 0; bit < words * 64 && rank < rows.size(); ++bit) {
        const std::size_t w = bit / 64;
        const std::uint64_t mask = std::uint64_t{1} << (bit % 64);
        auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                                  [&](const auto& r) { return (r[w] & mask) != 0; });
        if (pivot == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r][w] & mask)) {
                for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
            }
        }
        ++rank;
    }
    return rank;
}

// Cut vertices by the lowpoint method.
std::vector<VertexId> articulation_points(const CubeGraph& g)
{
    const std::size_t n = g.size();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> cut(n, 0);
    int time = 0;
    std::function<void(VertexId, int)> dfs = [&](VertexId v, int parent) {
        disc[v] = low[v] = time++;
        int children = 0;
        for (const Arc& a : g.neighbors(v)) {
            if (disc[a.to] < 0) {
                ++children;
                dfs(a.to, static_cast<int>(v));
                low[v] = std::min(low[v], low[a.to]);
                if (parent >= 0 && low[a.to] >= disc[v]) cut[v] = 1;
            } else if (static_cast<int>(a.to) != parent) {
                low[v] = std::min(low[v], disc[a.to]);
            }
        }
        if (parent < 0 && children > 1) cut[v] = 1;
    };
    if (n > 0) dfs(0, -1);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
        if (cut[v]) out.push_back(v);
    }
    return out;
}

std::vector<Label> sorted_labels(const CubeGraph& g, const VertexSet& s)
{
    std::vector<Label> out = g.labels_of(s);
    std::sort(out.begin(), out.end());
    return out;
}

CoordinateMap compose(const CoordinateMap& outer, const CoordinateMap& inner)
{
    CoordinateMap out;
    out.source_dimension = outer.source_dimension;
    for (int k : inner.kept) out.kept.push_back(outer.kept[static_cast<std::size_t>(k)]);
    out.fixed = outer.lift(inner.fixed);
    return out;
}

CoordinateMap identity_map(int m)
{
    CoordinateMap map;
    map.source_dimension = m;
    for (int k = 0; k < m; ++k) map.kept.push_back(k);
    return map;
}

struct Decomposer {
    AmalgamTree tree;

    std::size_t add(AmalgamNode node)
    {
        tree.nodes.push_back(std::move(node));
        return tree.nodes.size() - 1;
    }

    std::vector<Label> lift_all(const CubeGraph& h, const CoordinateMap& map, const VertexSet& s)
    {
        std::vector<Label> out;
        for (VertexId v : s) out.push_back(map.lift(h.label(v)));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::optional<AmalgamNode::Cell> cell_kind(const CubeGraph& h)
    {
        if (h.size() == 1) return AmalgamNode::Cell::Vertex;
        if (h.size() == 2) return AmalgamNode::Cell::Edge;
        bool cycle = true;
        for (VertexId v = 0; v < h.size(); ++v) cycle = cycle && h.neighbors(v).size() == 2;
        if (cycle) return AmalgamNode::Cell::Cycle;
        const auto f = as_full_subdivision(h, h.all_vertices());
        if (f && f->n >= 4) return AmalgamNode::Cell::FullSubdivision;
        return std::nullopt;
    }

    std::size_t run(const CubeGraph& h, const CoordinateMap& map)
    {
        const std::size_t id = add({});
        tree.nodes[id].vertices = lift_all(h, map, h.all_vertices());
        if (const auto kind = cell_kind(h)) {
            tree.nodes[id].kind = AmalgamNode::Kind::Leaf;
            tree.nodes[id].cell = *kind;
            return id;
        }
        VertexSet v1, v2;
        AmalgamNode::Kind kind = AmalgamNode::Kind::Split;
        int coord = -1;
        bool side = false;
        if (const auto cuts = articulation_points(h); !cuts.empty()) {
            kind = AmalgamNode::Kind::Articulation;
            const VertexId a = cuts.front();
            // The component of h - a holding the smallest other vertex.
            std::vector<char> seen(h.size(), 0);
            seen[a] = 1;
            const VertexId start = a == 0 ? 1 : 0;
            std::vector<VertexId> stack{start};
            seen[start] = 1;
            while (!stack.empty()) {
                const VertexId x = stack.back();
                stack.pop_back();
                for (const Arc& arc : h.neighbors(x)) {
                    if (!seen[arc.to]) {
                        seen[arc.to] = 1;
                        stack.push_back(arc.to);
                    }
                }
            }
            for (VertexId v = 0; v < h.size(); ++v) {
                if (v == a || seen[v]) v1.push_back(v);
                if (v == a || !seen[v]) v2.push_back(v);
            }
        } else {
            if (!find_split(h, v1, v2, coord, side)) {
                throw Error(Errc::InvariantViolation, "no pair of gated cells sharing an edge");
            }
        }
        tree.nodes[id].kind = kind;
        tree.nodes[id].coord = coord >= 0 ? map.kept[static_cast<std::size_t>(coord)] : -1;
        tree.nodes[id].side = side;
        for (const VertexSet* part : {&v1, &v2}) {
            const Subgraph sub = induced_subgraph(h, *part);
            const std::size_t child = run(sub.graph, compose(map, sub.map));
            tree.nodes[id].children.push_back(child);
        }
        return id;
    }

    bool find_split(const CubeGraph& h, VertexSet& v1, VertexSet& v2, int& coord, bool& side)
    {
        std::vector<VertexSet> cells;
        for (const Cycle& c : convex_cycles(h)) {
            VertexSet s = make_set(c);
            if (is_gated(h, s)) cells.push_back(std::move(s));
        }
        for (const FullSubdivision& f : full_subdivisions(h, 4)) {
            if (f.gated) cells.push_back(f.vertices);
        }
        for (const VertexSet& c1 : cells) {
            for (const VertexSet& c2 : cells) {
                if (&c1 == &c2) continue;
                const VertexSet e = set_intersection(c1, c2);
                if (e.size() != 2 || h.distance(e[0], e[1]) != 1) continue;
                const Label shared = h.label(e[0]) ^ h.label(e[1]);
                Label ones, zeros;
                for (VertexId v : c1) {
                    ones |= h.label(v);
                    zeros |= h.label(v).complement(h.dimension());
                }
                const Label crossing = ones & zeros & shared.complement(h.dimension());
                for (int i = 0; i < h.dimension(); ++i) {
                    if (!crossing.has(i)) continue;
                    const bool s = h.label(c2.front()).has(i);
                    if (!std::all_of(c2.begin(), c2.end(), [&](VertexId v) { return h.label(v).has(i) == s; })) continue;
                    VertexSet a = extended_halfspace(h, i, s);
                    VertexSet b = halfspace(h, i, s);
                    if (!is_two_dimensional_amalgam(h, a, b)) continue;
                    v1 = std::move(a);
                    v2 = std::move(b);
                    coord = i;
                    side = s;
                    return true;
                }
            }
        }
        return false;
    }
};

} // namespace

CellComplex cell_complex(const CubeGraph& g)
{
    CellComplex cx;
    cx.vertices = g.size();
    cx.edges = g.edges();
    cx.cells = convex_cycles(g);
    cx.edge_cells.resize(cx.edges.size());
    std::map<std::pair<VertexId, VertexId>, std::size_t> edge_index;
    for (std::size_t k = 0; k < cx.edges.size(); ++k) {
        const Edge& e = cx.edges[k];
        edge_index[{std::min(e.u, e.v), std::max(e.u, e.v)}] = k;
    }
    const std::size_t words = (cx.edges.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows;
    for (std::size_t c = 0; c < cx.cells.size(); ++c) {
        const Cycle& cyc = cx.cells[c];
        std::vector<std::uint64_t> row(std::max<std::size_t>(words, 1), 0);
        for (std::size_t t = 0; t < cyc.size(); ++t) {
            const VertexId a = cyc[t];
            const VertexId b = cyc[(t + 1) % cyc.size()];
            const std::size_t k = edge_index.at({std::min(a, b), std::max(a, b)});
            cx.edge_cells[k].push_back(c);
            row[k / 64] |= std::uint64_t{1} << (k % 64);
        }
        rows.push_back(std::move(row));
    }
    cx.cycle_rank = cx.edges.size() + 1 - cx.vertices;
    cx.cell_rank = gf2_rank(std::move(rows));
    cx.spans = cx.cell_rank == cx.cycle_rank;
    return cx;
}

VertexSet carrier(const CubeGraph& g, int coord)
{
    require_coordinate(g, coord);
    VertexSet out;
    for (const Edge& e : theta_class(g, coord).edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    for (const Cycle& c : convex_cycles(g)) {
        bool lo = false, hi = false;
        for (VertexId v : c) (g.label(v).has(coord) ? hi : lo) = true;
        if (lo && hi) out.insert(out.end(), c.begin(), c.end());
    }
    return make_set(std::move(out));
}

VertexSet half_carrier(const CubeGraph& g, int coord, bool positive)
{
    return set_intersection(carrier(g, coord), halfspace(g, coord, positive));
}

VertexSet extended_halfspace(const CubeGraph& g, int coord, bool positive)
{
    return set_union(halfspace(g, coord, !positive), half_carrier(g, coord, positive));
}

long euler_characteristic(const CubeGraph& g, ComplexChoice choice)
{
    if (choice == ComplexChoice::CompletedCells) return euler_characteristic(com_completion(g).output);
    const CellComplex cx = cell_complex(g);
    return static_cast<long>(cx.vertices) - static_cast<long>(cx.edges.size()) + static_cast<long>(cx.cells.size());
}

std::vector<std::size_t> AmalgamTree::leaves() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (nodes[k].kind == AmalgamNode::Kind::Leaf) out.push_back(k);
    }
    return out;
}

AmalgamTree amalgam_decompose(const CubeGraph& g)
{
    if (!is_two_dimensional(g)) throw Error(Errc::HostNotTwoDimensional, "host has VC-dimension above 2");
    Decomposer d;
    d.tree.m = g.dimension();
    d.run(g, identity_map(g.dimension()));
    return std::move(d.tree);
}

CubeGraph reassemble(const AmalgamTree& t)
{
    std::vector<Label> labels;
    for (std::size_t k : t.leaves()) {
        const auto& v = t.nodes[k].vertices;
        labels.insert(labels.end(), v.begin(), v.end());
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return CubeGraph::from_labels(t.m, std::move(labels));
}

bool is_two_dimensional_amalgam(const CubeGraph& g, const VertexSet& v1, const VertexSet& v2)
{
    const VertexSet both = set_intersection(v1, v2);
    if (set_union(v1, v2).size() != g.size() || both.empty() || both.size() == v1.size() || both.size() == v2.size()) {
        return false;
    }
    for (const Edge& e : g.edges()) {
        const bool in1 = set_contains(v1, e.u) && set_contains(v1, e.v);
        const bool in2 = set_contains(v2, e.u) && set_contains(v2, e.v);
        if (!in1 && !in2) return false;
    }
    for (const VertexSet* part : {&v1, &v2, &both}) {
        if (!is_isometric(g, *part)) return false;
        if (!is_two_dimensional(induced_subgraph(g, *part).graph)) return false;
    }
    const Subgraph g12 = induced_subgraph(g, both);
    std::vector<std::vector<Label>> host;
    for (const FullSubdivision& f : full_subdivisions(g, 4)) host.push_back(sorted_labels(g, f.vertices));
    for (const FullSubdivision& f : full_subdivisions(g12.graph, 4)) {
        std::vector<Label> lifted;
        for (VertexId v : f.vertices) lifted.push_back(g12.map.lift(g12.graph.label(v)));
        std::sort(lifted.begin(), lifted.end());
        if (std::find(host.begin(), host.end(), lifted) == host.end()) return false;
    }
    return true;
}

std::string to_text(const AmalgamTree& t)
{
    std::ostringstream out;
    auto cell_name = [](AmalgamNode::Cell c) {
        switch (c) {
        case AmalgamNode::Cell::Vertex: return "vertex";
        case AmalgamNode::Cell::Edge: return "edge";
        case AmalgamNode::Cell::Cycle: return "cycle";
        case AmalgamNode::Cell::FullSubdivision: return "full-subdivision";
        }
        return "?";
    };
    std::function<void(std::size_t, int)> walk = [&](std::size_t k, int depth) {
        const AmalgamNode& n = t.nodes[k];
        out << std::string(static_cast<std::size_t>(2 * depth), ' ');
        switch (n.kind) {
        case AmalgamNode::Kind::Leaf: out << cell_name(n.cell); break;
        case AmalgamNode::Kind::Articulation: out << "articulation"; break;
        case AmalgamNode::Kind::Split: out << "split class " << n.coord + 1 << (n.side ? " +" : " -"); break;
        }
        out << " (" << n.vertices.size() << " vertices):";
        for (Label l : n.vertices) out << ' ' << l.to_bitstring(t.m);
        out << '\n';
        for (std::size_t c : n.children) walk(c, depth + 1);
    };
    if (!t.nodes.empty()) walk(0, 0);
    return out.str();
}

} // namespace pcube
