#include "pcube/cells.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "pcube/canonical.hpp"
#include "pcube/generators.hpp"
#include "pcube/minors.hpp"

namespace pcube {

namespace {

// Orders the vertices of a set inducing a cycle.
Cycle walk_cycle(const CubeGraph& g, const VertexSet& s)
{
    auto next_on_cycle = [&](VertexId at, VertexId prev) {
        VertexId best = at;
        for (const Arc& a : g.neighbors(at)) {
            if (a.to != prev && set_contains(s, a.to) && (best == at || a.to < best)) best = a.to;
        }
        return best;
    };
    Cycle out{s.front()};
    VertexId prev = s.front();
    VertexId at = next_on_cycle(s.front(), s.front());
    while (at != s.front()) {
        out.push_back(at);
        const VertexId next = next_on_cycle(at, prev);
        prev = at;
        at = next;
    }
    return normalize_cycle(std::move(out));
}

bool induces_cycle(const CubeGraph& g, const VertexSet& s)
{
    if (s.size() < 4) return false;
    for (VertexId v : s) {
        int inside = 0;
        for (const Arc& a : g.neighbors(v)) inside += set_contains(s, a.to) ? 1 : 0;
        if (inside != 2) return false;
    }
    return is_connected(g, s);
}

FullSubdivision make_subdivision(const CubeGraph& g, Label center, std::vector<int> coords)
{
    FullSubdivision h;
    h.n = static_cast<int>(coords.size());
    h.center = center;
    h.coords = std::move(coords);
    for (int i = 0; i < h.n; ++i) h.originals.push_back(g.at(center.flipped(h.coords[static_cast<std::size_t>(i)])));
    for (int i = 0; i < h.n; ++i) {
        for (int j = i + 1; j < h.n; ++j) {
            h.subdivisions.push_back(g.at(center.flipped(h.coords[static_cast<std::size_t>(i)])
                                              .flipped(h.coords[static_cast<std::size_t>(j)])));
        }
    }
    std::vector<VertexId> all = h.originals;
    all.insert(all.end(), h.subdivisions.begin(), h.subdivisions.end());
    h.vertices = make_set(std::move(all));
    h.convex = is_convex(g, h.vertices);
    h.gated = is_gated(g, h.vertices);
    h.extends_to_star = g.contains(center);
    return h;
}

// Centers of possible full subdivisions: vertices and their cube neighbors.
std::vector<Label> candidate_centers(const CubeGraph& g)
{
    std::unordered_set<Label> seen;
    std::vector<Label> out;
    for (Label l : g.labels()) {
        if (seen.insert(l).second) out.push_back(l);
        for (int c = 0; c < g.dimension(); ++c) {
            if (seen.insert(l.flipped(c)).second) out.push_back(l.flipped(c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Coordinates around `center` whose flips are vertices, and the compatibility
// relation "the double flip is a vertex too", as bitmasks over indices.
struct CenterStar {
    std::vector<int> coords;
    std::vector<std::uint64_t> compatible;
};

CenterStar center_star(const CubeGraph& g, Label center)
{
    CenterStar s;
    for (int c = 0; c < g.dimension(); ++c) {
        if (g.contains(center.flipped(c))) s.coords.push_back(c);
    }
    s.compatible.assign(s.coords.size(), 0);
    for (std::size_t a = 0; a < s.coords.size(); ++a) {
        for (std::size_t b = a + 1; b < s.coords.size(); ++b) {
            if (g.contains(center.flipped(s.coords[a]).flipped(s.coords[b]))) {
                s.compatible[a] |= std::uint64_t{1} << b;
                s.compatible[b] |= std::uint64_t{1} << a;
            }
        }
    }
    return s;
}

template <class F>
void maximal_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t p, std::uint64_t x, F&& emit)
{
    if (p == 0 && x == 0) {
        emit(r);
        return;
    }
    const std::uint64_t px = p | x;
    const int pivot = std::countr_zero(px);
    std::uint64_t todo = p & ~adj[static_cast<std::size_t>(pivot)];
    while (todo != 0) {
        const int v = std::countr_zero(todo);
        const std::uint64_t bit = std::uint64_t{1} << v;
        todo &= todo - 1;
        maximal_cliques(adj, r | bit, p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], emit);
        p &= ~bit;
        x |= bit;
    }
}

template <class F>
void all_cliques(const std::vector<std::uint64_t>& adj, std::uint64_t r, std::uint64_t candidates, F&& emit)
{
    emit(r);
    while (candidates != 0) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        all_cliques(adj, r | (std::uint64_t{1} << v), candidates & adj[static_cast<std::size_t>(v)], emit);
    }
}

std::vector<int> clique_coords(const CenterStar& s, std::uint64_t clique)
{
    std::vector<int> out;
    for (std::uint64_t b = clique; b != 0; b &= b - 1) out.push_back(s.coords[static_cast<std::size_t>(std::countr_zero(b))]);
    return out;
}

std::vector<FullSubdivision> collect(const CubeGraph& g, int n_min, bool maximal_only)
{
    std::map<VertexSet, FullSubdivision> found;
    for (Label center : candidate_centers(g)) {
        const CenterStar s = center_star(g, center);
        if (static_cast<int>(s.coords.size()) < n_min) continue;
        const std::uint64_t everyone =
            s.coords.size() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.coords.size()) - 1;
        auto emit = [&](std::uint64_t clique) {
            if (std::popcount(clique) < n_min) return;
            FullSubdivision h = make_subdivision(g, center, clique_coords(s, clique));
            found.try_emplace(h.vertices, std::move(h));
        };
        if (maximal_only) {
            maximal_cliques(s.compatible, 0, everyone, 0, emit);
        } else {
            all_cliques(s.compatible, 0, everyone, emit);
        }
    }
    std::vector<FullSubdivision> out;
    for (auto& [set, h] : found) {
        if (maximal_only) {
            // A 6-cycle has two centers; it may be maximal around one of them only.
            bool contained = false;
            for (const auto& [other, _] : found) {
                if (other.size() > set.size() && set_includes(other, set)) contained = true;
            }
            if (contained) continue;
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool is_cyclic_isometric(const CubeGraph& g, const Cycle& c)
{
    const std::size_t len = c.size();
    if (len < 4 || len % 2 != 0) return false;
    for (std::size_t i = 0; i < len; ++i) {
        if (c[i] >= g.size()) return false;
        for (std::size_t j = i + 1; j < len; ++j) {
            const std::size_t gap = std::min(j - i, len - (j - i));
            if (g.distance(c[i], c[j]) != static_cast<int>(gap)) return false;
        }
    }
    return true;
}

} // namespace

Cycle normalize_cycle(Cycle c)
{
    if (c.size() < 3) return c;
    const auto first = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), first, c.end());
    if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
}

std::vector<Cycle> convex_cycles(const CubeGraph& g)
{
    std::set<VertexSet> sets;
    for (VertexId u = 0; u < g.size(); ++u) {
        for (VertexId v = u + 1; v < g.size(); ++v) {
            const int d = g.distance(u, v);
            if (d < 2) continue;
            VertexSet i = interval(g, u, v);
            if (i.size() == static_cast<std::size_t>(2 * d) && induces_cycle(g, i)) sets.insert(std::move(i));
        }
    }
    std::vector<Cycle> out;
    for (const VertexSet& s : sets) out.push_back(walk_cycle(g, s));
    std::stable_sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) { return a.size() < b.size(); });
    return out;
}

std::vector<Cycle> isometric_cycles(const CubeGraph& g, CycleSearchOptions opts)
{
    const int max_len = opts.max_length > 0 ? opts.max_length : 2 * g.dimension();
    std::vector<Cycle> out;
    std::uint64_t nodes = 0;
    Cycle path;
    for (int len = 4; len <= max_len; len += 2) {
        for (VertexId s = 0; s < g.size(); ++s) {
            path.assign(1, s);
            std::function<void()> extend = [&]() {
                if (++nodes > opts.budget) throw Error(Errc::BudgetExceeded, "isometric cycle search exceeds budget");
                const std::size_t j = path.size();
                if (j == static_cast<std::size_t>(len)) {
                    if (path[1] < path.back()) out.push_back(path);
                    return;
                }
                for (const Arc& a : g.neighbors(path.back())) {
                    if (a.to <= s) continue;
                    bool ok = true;
                    for (std::size_t i = 0; i + 1 < j && ok; ++i) {
                        const std::size_t gap = std::min(j - i, static_cast<std::size_t>(len) - (j - i));
                        ok = g.distance(path[i], a.to) == static_cast<int>(gap);
                    }
                    if (!ok) continue;
                    path.push_back(a.to);
                    extend();
                    path.pop_back();
                }
            };
            extend();
        }
    }
    return out;
}

bool is_isometric_cycle(const CubeGraph& g, const Cycle& c) { return is_cyclic_isometric(g, c); }

// ---------------------------------------------------------------------------
// Full subdivisions

std::size_t FullSubdivision::pair_index(int i, int j) const
{
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
}

std::vector<FullSubdivision> full_subdivisions(const CubeGraph& g, int n_min)
{
    return collect(g, std::max(n_min, 3), true);
}

std::vector<FullSubdivision> all_full_subdivisions(const CubeGraph& g, int n_min)
{
    return collect(g, std::max(n_min, 3), false);
}

std::optional<FullSubdivision> as_full_subdivision(const CubeGraph& g, const VertexSet& s)
{
    int n = 3;
    while (static_cast<std::size_t>(n * (n + 1) / 2) < s.size()) ++n;
    if (static_cast<std::size_t>(n * (n + 1) / 2) != s.size()) return std::nullopt;
    std::unordered_set<Label> inside;
    for (VertexId v : s) inside.insert(g.label(v));
    for (VertexId x : s) {
        std::vector<VertexId> nbs;
        for (const Arc& a : g.neighbors(x)) {
            if (set_contains(s, a.to)) nbs.push_back(a.to);
        }
        for (std::size_t a = 0; a < nbs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbs.size(); ++b) {
                // A subdivision vertex and its two originals XOR to the center.
                const Label center = g.label(x) ^ g.label(nbs[a]) ^ g.label(nbs[b]);
                std::vector<int> coords;
                for (int c = 0; c < g.dimension(); ++c) {
                    if (inside.contains(center.flipped(c))) coords.push_back(c);
                }
                if (static_cast<int>(coords.size()) != n) continue;
                bool ok = true;
                for (std::size_t i = 0; i < coords.size() && ok; ++i) {
                    for (std::size_t j = i + 1; j < coords.size() && ok; ++j) {
                        ok = inside.contains(center.flipped(coords[i]).flipped(coords[j]));
                    }
                }
                if (ok) return make_subdivision(g, center, std::move(coords));
            }
        }
    }
    return std::nullopt;
}

StandardEmbedding standardize(const CubeGraph& g, const FullSubdivision& h)
{
    if (h.n < 3 || static_cast<int>(h.coords.size()) != h.n || static_cast<int>(h.originals.size()) != h.n ||
        h.subdivisions.size() != static_cast<std::size_t>(h.n * (h.n - 1) / 2)) {
        throw Error(Errc::NotFullSubdivision, "malformed full subdivision");
    }
    for (int i = 0; i < h.n; ++i) {
        const VertexId u = h.originals[static_cast<std::size_t>(i)];
        if (u >= g.size() || g.label(u) != h.center.flipped(h.coords[static_cast<std::size_t>(i)])) {
            throw Error(Errc::NotFullSubdivision, "original vertex does not match its coordinate");
        }
        for (int j = i + 1; j < h.n; ++j) {
            const VertexId w = h.subdivision(i, j);
            if (w >= g.size() || g.label(w) != g.label(u).flipped(h.coords[static_cast<std::size_t>(j)])) {
                throw Error(Errc::NotFullSubdivision, "subdivision vertex does not match its pair");
            }
        }
    }
    StandardEmbedding out;
    out.shift = h.center;
    out.perm.assign(static_cast<std::size_t>(g.dimension()), -1);
    int next = 0;
    for (int c : h.coords) out.perm[static_cast<std::size_t>(c)] = next++;
    for (int c = 0; c < g.dimension(); ++c) {
        if (out.perm[static_cast<std::size_t>(c)] < 0) out.perm[static_cast<std::size_t>(c)] = next++;
    }
    out.graph = relabel(g, out.shift, out.perm);
    return out;
}

// ---------------------------------------------------------------------------
// Disks and antipodes

std::optional<VertexId> antipode(const CubeGraph& g, VertexId v)
{
    if (v >= g.size()) throw Error(Errc::UnknownVertex, "vertex id out of range");
    return g.find(g.label(v).complement(g.dimension()));
}

VertexSet antipodal_vertices(const CubeGraph& g)
{
    VertexSet out;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (antipode(g, v)) out.push_back(v);
    }
    return out;
}

std::optional<Disk> is_disk(const CubeGraph& g)
{
    const int m = g.dimension();
    if (!is_two_dimensional(g)) return std::nullopt;
    Disk d;
    d.vertices = g.all_vertices();
    d.antipodal = antipodal_vertices(g);
    if (m <= 1) {
        d.boundary = g.all_vertices();
    } else {
        // A boundary with convex hull G crosses every class, so it has
        // length 2m and consists of a geodesic v..-v and its antipodal image.
        std::vector<char> dead(g.size(), 0);
        std::vector<VertexId> path;
        std::function<bool(VertexId, VertexId)> search = [&](VertexId at, VertexId goal) -> bool {
            path.push_back(at);
            if (at == goal) return true;
            const Label remaining = g.label(at) ^ g.label(goal);
            for (const Arc& a : g.neighbors(at)) {
                if (!remaining.has(a.coord) || dead[a.to] || !antipode(g, a.to)) continue;
                if (search(a.to, goal)) return true;
            }
            dead[at] = 1;
            path.pop_back();
            return false;
        };
        for (VertexId v : d.antipodal) {
            std::fill(dead.begin(), dead.end(), 0);
            path.clear();
            if (search(v, *antipode(g, v))) break;
        }
        if (path.empty()) return std::nullopt;
        d.boundary = path;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) d.boundary.push_back(*antipode(g, path[i]));
        d.boundary = normalize_cycle(std::move(d.boundary));
        if (!is_cyclic_isometric(g, d.boundary)) {
            throw Error(Errc::InvariantViolation, "disk boundary is not an isometric cycle");
        }
    }
    if (make_set(d.boundary) != d.antipodal) {
        throw Error(Errc::InvariantViolation, "antipodal vertices of a disk differ from its boundary");
    }
    return d;
}

std::optional<Disk> is_disk(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty() || !is_connected(g, s) || !is_isometric(g, s)) return std::nullopt;
    const Subgraph sub = induced_subgraph(g, s);
    auto d = is_disk(sub.graph);
    if (!d) return std::nullopt;
    auto lift = [&](VertexId v) { return g.at(sub.map.lift(sub.graph.label(v))); };
    Disk out;
    for (VertexId v : d->vertices) out.vertices.push_back(lift(v));
    for (VertexId v : d->boundary) out.boundary.push_back(lift(v));
    for (VertexId v : d->antipodal) out.antipodal.push_back(lift(v));
    out.vertices = make_set(std::move(out.vertices));
    out.antipodal = make_set(std::move(out.antipodal));
    out.boundary = normalize_cycle(std::move(out.boundary));
    return out;
}

std::optional<std::pair<VertexId, VertexId>> affine_witness(const CubeGraph& g, const Disk& d, VertexId u, VertexId v)
{
    if (d.vertices.empty() || d.boundary.empty()) throw Error(Errc::NotADisk, "empty disk");
    for (VertexId x : d.vertices) {
        if (x >= g.size()) throw Error(Errc::NotADisk, "disk vertex outside the graph");
    }
    const bool trivial = d.boundary.size() <= 2;
    if (!trivial && !is_cyclic_isometric(g, d.boundary)) throw Error(Errc::NotADisk, "boundary is not isometric");
    if (convex_hull(g, make_set(d.boundary)).vertices != d.vertices) {
        throw Error(Errc::NotADisk, "boundary hull differs from the disk");
    }
    if (!set_contains(d.vertices, u) || !set_contains(d.vertices, v)) {
        throw Error(Errc::UnknownVertex, "vertex outside the disk");
    }
    Label span;
    for (VertexId x : d.vertices) span |= g.label(x) ^ g.label(d.vertices.front());
    std::size_t start = 0;
    if (auto it = std::find(d.boundary.begin(), d.boundary.end(), u); it != d.boundary.end()) {
        start = static_cast<std::size_t>(it - d.boundary.begin());
    }
    for (std::size_t k = 0; k < d.boundary.size(); ++k) {
        const VertexId w = d.boundary[(start + k) % d.boundary.size()];
        const auto minus_w = g.find(g.label(w) ^ span);
        if (!minus_w || !set_contains(d.vertices, *minus_w)) continue;
        const Label first = g.label(w) ^ g.label(u);
        const Label second = g.label(v) ^ g.label(*minus_w);
        if ((first & second).empty()) return std::pair{w, *minus_w};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gated hulls of isometric cycles

CycleClassification classify_isometric_cycle(const CubeGraph& g, const Cycle& c)
{
    if (!is_two_dimensional(g)) throw Error(Errc::HostNotTwoDimensional, "host contains a shattered triple");
    if (!is_cyclic_isometric(g, c)) throw Error(Errc::NotIsometric, "cycle is not isometric");
    const VertexSet cs = make_set(c);
    CycleClassification out;
    if (c.size() == 4) {
        out.kind = CycleClassification::Kind::ConvexCycle;
        out.gated_hull = gated_hull(g, cs);
        return out;
    }
    if (c.size() == 6) {
        out.gated_hull = gated_hull(g, cs);
        if (out.gated_hull == cs) {
            out.kind = CycleClassification::Kind::ConvexCycle;
            return out;
        }
        const Hull hull = convex_hull(g, cs);
        if (hull.vertices != cs) {
            const Subgraph sub = induced_subgraph(g, hull.vertices);
            if (hull.vertices == out.gated_hull && isomorphic(sub.graph, gen::cube_minus(3))) {
                out.kind = CycleClassification::Kind::QThreeMinus;
                return out;
            }
            throw Error(Errc::InvariantViolation, "hull of a non-convex 6-cycle is not a gated Q_3^-");
        }
        auto h = as_full_subdivision(g, out.gated_hull);
        if (h && h->n >= 4 && h->gated) {
            const auto maximal = full_subdivisions(g, 4);
            const bool is_maximal = std::any_of(maximal.begin(), maximal.end(),
                                                [&](const FullSubdivision& f) { return f.vertices == h->vertices; });
            if (is_maximal) {
                out.kind = CycleClassification::Kind::FullSubdivision;
                out.subdivision = std::move(h);
                return out;
            }
        }
        throw Error(Errc::InvariantViolation, "gated hull of a convex 6-cycle is not a maximal full subdivision");
    }
    const Hull hull = convex_hull(g, cs);
    auto disk = is_disk(g, hull.vertices);
    if (!disk) throw Error(Errc::InvariantViolation, "hull of a long isometric cycle is not a disk");
    if (!is_gated(g, hull.vertices)) throw Error(Errc::InvariantViolation, "disk of a long isometric cycle is not gated");
    out.kind = CycleClassification::Kind::GatedDisk;
    out.gated_hull = hull.vertices;
    out.disk = std::move(disk);
    return out;
}

} // namespace pcube
