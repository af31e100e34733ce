#include "pcube/expansion.hpp"

#include <algorithm>

#include "pcube/minors.hpp"

namespace pcube {

namespace {

VertexSet normalized(const CubeGraph& g, VertexSet s)
{
    for (VertexId v : s) {
        if (v >= g.size()) throw Error(Errc::UnknownVertex, "vertex id " + std::to_string(v) + " out of range");
    }
    return make_set(std::move(s));
}

VertexSet from_mask(std::uint64_t mask, std::size_t n)
{
    VertexSet s;
    for (VertexId v = 0; v < n; ++v) {
        if ((mask >> v) & 1u) s.push_back(v);
    }
    return s;
}

} // namespace

IsometricCover check_cover(const CubeGraph& g, VertexSet v1, VertexSet v2)
{
    IsometricCover c{normalized(g, std::move(v1)), normalized(g, std::move(v2)), {}};
    if (set_union(c.v1, c.v2).size() != g.size()) throw Error(Errc::EdgeNotCovered, "some vertex lies in neither part");
    for (const Edge& e : g.edges()) {
        const bool in1 = set_contains(c.v1, e.u) && set_contains(c.v1, e.v);
        const bool in2 = set_contains(c.v2, e.u) && set_contains(c.v2, e.v);
        if (!in1 && !in2) {
            throw Error(Errc::EdgeNotCovered, "edge " + g.label(e.u).to_bitstring(g.dimension()) + "-" +
                                                  g.label(e.v).to_bitstring(g.dimension()) + " lies in neither part");
        }
    }
    if (!c.v1.empty() && !is_isometric(g, c.v1)) throw Error(Errc::NotIsometricPart, "first part is not isometric");
    if (!c.v2.empty() && !is_isometric(g, c.v2)) throw Error(Errc::NotIsometricPart, "second part is not isometric");
    c.v0 = set_intersection(c.v1, c.v2);
    if (c.v0.empty()) throw Error(Errc::EmptyIntersection, "parts are disjoint");
    return c;
}

ExpansionResult expand(const CubeGraph& g, const IsometricCover& cover)
{
    const int m = g.dimension();
    if (m >= kMaxDimension) throw Error(Errc::InvalidArgument, "no room for another coordinate");
    std::vector<Label> labels;
    for (VertexId v : cover.v1) labels.push_back(g.label(v));
    for (VertexId v : cover.v2) labels.push_back(g.label(v).with(m, true));
    ExpansionResult r;
    r.graph = CubeGraph::from_labels(m + 1, std::move(labels));
    r.new_coord = m;
    if (r.graph.dimension() != m + 1) throw Error(Errc::InvariantViolation, "expansion lost a coordinate");
    r.copies.resize(g.size());
    for (VertexId v : cover.v1) r.copies[v][0] = r.graph.at(g.label(v));
    for (VertexId v : cover.v2) r.copies[v][1] = r.graph.at(g.label(v).with(m, true));
    return r;
}

VertexSet expansion_image(const ExpansionResult& r, const VertexSet& s)
{
    VertexSet out;
    for (VertexId v : s) {
        for (const auto& copy : r.copies.at(v)) {
            if (copy) out.push_back(*copy);
        }
    }
    return make_set(std::move(out));
}

bool preserves_dimension(const CubeGraph& g, const IsometricCover& cover, int d)
{
    const auto labels = g.labels_of(cover.v0);
    return vc_dimension(SetFamily::make(g.dimension(), labels), d) <= d - 1;
}

std::vector<ExpansionStep> expansion_sequence(const CubeGraph& g)
{
    std::vector<ExpansionStep> steps;
    CubeGraph cur = g;
    for (int k = g.dimension() - 1; k >= 0; --k) {
        CubeGraph smaller = contract(cur, k);
        VertexSet v1, v2;
        for (Label l : cur.labels()) (l.has(k) ? v2 : v1).push_back(smaller.at(l.with(k, false)));
        IsometricCover cover = check_cover(smaller, std::move(v1), std::move(v2));
        steps.push_back({smaller, std::move(cover)});
        cur = std::move(smaller);
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::vector<IsometricCover> enumerate_covers(const CubeGraph& g, CoverOptions opts)
{
    const std::size_t n = g.size();
    if (n > 20) throw Error(Errc::BudgetExceeded, "too many vertices for cover enumeration");
    std::vector<std::uint8_t> isometric(std::size_t{1} << n, 2);
    std::size_t examined = 0;
    auto tick = [&]() {
        if (++examined > opts.budget) throw Error(Errc::BudgetExceeded, "cover enumeration budget exhausted");
    };
    auto is_iso = [&](std::uint64_t mask) {
        if (isometric[mask] == 2) isometric[mask] = is_isometric(g, from_mask(mask, n)) ? 1 : 0;
        return isometric[mask] == 1;
    };
    const auto edges = g.edges();
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::vector<IsometricCover> out;
    for (std::uint64_t m1 = 1; m1 <= all; ++m1) {
        tick();
        if (!is_iso(m1)) continue;
        std::uint64_t forced = all & ~m1;
        for (const Edge& e : edges) {
            const std::uint64_t both = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
            if ((m1 & both) != both) forced |= both;
        }
        const std::uint64_t free = m1 & ~forced;
        // Subsets of `free`, including the empty one.
        std::uint64_t sub = free;
        while (true) {
            const std::uint64_t m2 = forced | sub;
            tick();
            if (m2 != 0 && (m1 & m2) != 0 && is_iso(m2)) {
                out.push_back({from_mask(m1, n), from_mask(m2, n), from_mask(m1 & m2, n)});
            }
            if (sub == 0) break;
            sub = (sub - 1) & free;
        }
    }
    return out;
}

} // namespace pcube
