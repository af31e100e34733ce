#include <algorithm>
#include <random>

#include "doctest.h"
#include "pcube/canonical.hpp"
#include "pcube/cells.hpp"
#include "pcube/generators.hpp"
#include "pcube/minors.hpp"
#include "pcube/wiring.hpp"
#include "support.hpp"

using namespace pcube;
using testing::L;

namespace {

// Trace patterns by direct enumeration of all subsets of X.
bool brute_shattered(const SetFamily& f, Label x)
{
    for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << f.m); ++pat) {
        if (!Label{pat}.subset_of(x)) continue;
        bool hit = false;
        for (Label l : f.members) hit = hit || (l & x) == Label{pat};
        if (!hit) return false;
    }
    return true;
}

bool brute_strongly_shattered(const SetFamily& f, Label x)
{
    for (Label base : f.members) {
        const Label outside = base & x.complement(f.m);
        bool all = true;
        for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << f.m) && all; ++pat) {
            if (!Label{pat}.subset_of(x)) continue;
            all = std::binary_search(f.members.begin(), f.members.end(), outside | Label{pat});
        }
        if (all) return true;
    }
    return false;
}

int brute_vc(const SetFamily& f)
{
    int best = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.m); ++x) {
        if (brute_shattered(f, Label{x})) best = std::max(best, std::popcount(x));
    }
    return best;
}

SetFamily even_weight(int m)
{
    std::vector<Label> members;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
        if (std::popcount(b) % 2 == 0) members.emplace_back(b);
    }
    return SetFamily::make(m, members);
}

std::vector<CubeGraph> small_graphs()
{
    return {gen::hypercube(2), gen::hypercube(3), gen::cycle(6), gen::cycle(8), gen::path(4),
            gen::star(3), gen::full_subdivision(4), gen::full_subdivision_star(4), gen::cube_minus(3),
            gen::cube_minus_minus(4)};
}

} // namespace

TEST_CASE("contraction")
{
    for (int m = 1; m <= 4; ++m) {
        for (int i = 0; i < m; ++i) CHECK(contract(gen::hypercube(m), i) == gen::hypercube(m - 1));
    }
    for (int i = 0; i < 3; ++i) CHECK(isomorphic(contract(gen::cycle(6), i), gen::cycle(4)));
    CHECK_THROWS_AS(contract(gen::cycle(6), 3), Error);

    WiringDiagram w = parse_wiring("lines: 4\n1 3\n2\n1 3\n2\n");
    const CubeGraph disk = disk_from_wiring(w);
    for (int i = 0; i < disk.dimension(); ++i) CHECK(is_disk(contract(disk, i)).has_value());
}

TEST_CASE("contractions commute with each other and with restrictions")
{
    for (const CubeGraph& g : small_graphs()) {
        const int m = g.dimension();
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                // After contracting i, coordinate j moves to j - 1.
                CHECK(contract(contract(g, i), j - 1) == contract(contract(g, j), i));
                CHECK(contract(contract(g, i), j - 1) == contract(g, Label::unit(i) | Label::unit(j)));
                for (bool side : {false, true}) {
                    // Restricting to a side of j, then contracting i, versus the reverse.
                    Region full(m);
                    full.set(j, side ? Sign::Plus : Sign::Minus);
                    const CubeGraph a = apply_minor(g, MinorSpec{Label::unit(i), full});
                    Region r(m - 1);
                    r.set(j - 1, side ? Sign::Plus : Sign::Minus);
                    const CubeGraph b = restrict(contract(g, i), r);
                    std::vector<Label> labels;
                    for (Label l : g.labels()) {
                        if (l.has(j) == side) labels.push_back(delete_coordinate(l, i));
                    }
                    std::sort(labels.begin(), labels.end());
                    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
                    const CubeGraph direct = CubeGraph::from_labels(m - 1, labels);
                    CHECK(a == direct);
                    CHECK(b == direct);
                }
            }
        }
    }
}

TEST_CASE("contraction images of convex and gated sets")
{
    for (const CubeGraph& g : small_graphs()) {
        if (g.size() > 10) continue;
        for (std::uint32_t mask = 1; mask < (1u << g.size()); ++mask) {
            VertexSet s;
            for (VertexId v = 0; v < g.size(); ++v) {
                if ((mask >> v) & 1u) s.push_back(v);
            }
            const bool convex = is_convex(g, s);
            const bool gated = is_gated(g, s);
            for (int i = 0; i < g.dimension(); ++i) {
                const CubeGraph c = contract(g, i);
                auto image = [&](const VertexSet& set) {
                    std::vector<Label> labels;
                    for (VertexId v : set) labels.push_back(delete_coordinate(g.label(v), i));
                    return c.vertex_set(labels);
                };
                const VertexSet t = image(s);
                const ThetaClass cls = theta_class(g, i);
                bool crosses = false, touches = false;
                for (const Edge& e : cls.edges) {
                    const bool a = set_contains(s, e.u), b = set_contains(s, e.v);
                    crosses = crosses || (a && b);
                    touches = touches || a || b;
                }
                if (convex && (crosses || !touches)) CHECK(is_convex(c, t));
                if (gated) CHECK(is_gated(c, t));
                const VertexSet hull_image = image(convex_hull(g, s).vertices);
                const VertexSet image_hull = convex_hull(c, t).vertices;
                CHECK(set_includes(image_hull, hull_image));
                const bool spans = std::any_of(s.begin(), s.end(), [&](VertexId v) { return g.label(v).has(i); }) &&
                                   std::any_of(s.begin(), s.end(), [&](VertexId v) { return !g.label(v).has(i); });
                if (crosses || spans) {
                    CHECK(hull_image == image_hull);
                }
            }
        }
    }
}

TEST_CASE("restriction")
{
    for (int m = 1; m <= 4; ++m) {
        for (int i = 0; i < m; ++i) CHECK(restrict(gen::hypercube(m), i, true) == gen::hypercube(m - 1));
    }
    // SK*_4 restricted to each halfspace avoiding u_1 = {1}, against direct
    // label filtering.
    const CubeGraph star = gen::full_subdivision_star(4);
    const Label u1 = L({1});
    for (int i = 0; i < 4; ++i) {
        const bool side = !u1.has(i);
        std::size_t expected = 0;
        for (Label l : star.labels()) expected += l.has(i) == side ? 1 : 0;
        CHECK(restrict(star, i, side).size() == expected);
    }
    CHECK(restrict(star, 0, false).size() == 7);
    CHECK(restrict(star, 1, true).size() == 4);

    Region r(3);
    r.set(0, Sign::Plus);
    r.set(1, Sign::Plus);
    r.set(2, Sign::Plus);
    CHECK_THROWS_AS(restrict(gen::cube_minus(3), r), Error);

    MinorSpec all{Label::full(4), Region(4)};
    CHECK(apply_minor(gen::full_subdivision(4), all).size() == 1);
    MinorSpec clash{Label::unit(0), r};
    CHECK_THROWS_AS(apply_minor(gen::hypercube(3), clash), Error);
}

TEST_CASE("shattering")
{
    const SetFamily c6 = SetFamily::of(gen::cycle(6));
    CHECK(shattered(c6, Label{}));
    CHECK(strongly_shattered(c6, Label{}));
    CHECK(shattered(c6, L({1, 2})));
    CHECK_FALSE(strongly_shattered(c6, L({1, 2})));

    const SetFamily q3m = SetFamily::of(gen::cube_minus(3));
    for (Label x : {L({1, 2}), L({1, 3}), L({2, 3})}) CHECK(strongly_shattered(q3m, x));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 5);
        std::vector<Label> members;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) {
            if (rng() % 2) members.emplace_back(b);
        }
        if (members.empty()) continue;
        const SetFamily f = SetFamily::make(m, members);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
            CHECK(shattered(f, Label{x}) == brute_shattered(f, Label{x}));
            CHECK(strongly_shattered(f, Label{x}) == brute_strongly_shattered(f, Label{x}));
        }
        CHECK(vc_dimension(f) == brute_vc(f));
        const AmpleReport r = ample_report(f);
        CHECK(r.strongly_shattered <= r.family_size);
        CHECK(r.family_size <= r.shattered);
        // Sauer-Shelah bound for the computed dimension.
        const int d = vc_dimension(f);
        std::size_t phi = 0, binom = 1;
        for (int k = 0; k <= d; ++k) {
            phi += binom;
            binom = binom * static_cast<std::size_t>(m - k) / static_cast<std::size_t>(k + 1);
        }
        CHECK(f.size() <= phi);
        for (Label x : maximal_shattered_sets(f)) {
            CHECK(shattered(f, x));
            for (int c = 0; c < m; ++c) {
                if (!x.has(c)) CHECK_FALSE(shattered(f, x.with(c, true)));
            }
        }
    }
}

TEST_CASE("VC-dimension")
{
    for (int d = 0; d <= 4; ++d) CHECK(vc_dimension(gen::hypercube(d)) == d);
    for (int n = 4; n <= 6; ++n) {
        CHECK(vc_dimension(gen::full_subdivision(n)) == 2);
        CHECK(vc_dimension(gen::full_subdivision_star(n)) == 2);
    }
    const SetFamily even = even_weight(4);
    CHECK(vc_dimension(even) == brute_vc(even));
    CHECK(vc_dimension(even) == 3);
    CHECK_THROWS_AS(vc_dimension(SetFamily::make(2, {})), Error);
}

TEST_CASE("ampleness")
{
    for (int m = 0; m <= 4; ++m) CHECK(is_ample(gen::hypercube(m)));
    CHECK_FALSE(is_ample(gen::cube_minus_minus(4)));
    CHECK_FALSE(is_ample(gen::cycle(6)));
    const AmpleReport star = ample_report(SetFamily::of(gen::full_subdivision_star(4)));
    CHECK(star.ample);
    CHECK(star.family_size == 11);
    CHECK(star.shattered == 11);
    CHECK(star.strongly_shattered == 11);
}

TEST_CASE("two-dimensionality and membership")
{
    CHECK_FALSE(is_two_dimensional(gen::hypercube(3)));
    CHECK(is_two_dimensional(gen::full_subdivision(4)));
    CHECK(is_two_dimensional(gen::cube_minus(3)));

    const Membership star = membership(gen::full_subdivision_star(4));
    CHECK(star.fq3);
    CHECK(star.com2 == true);
    CHECK(star.ample2);

    const Membership sk4 = membership(gen::full_subdivision(4));
    CHECK(sk4.fq3);
    CHECK(sk4.com2 == false);
    CHECK_FALSE(sk4.ample2);

    const Membership c8 = membership(gen::cycle(8));
    CHECK(c8.fq3);
    CHECK(c8.com2 == true);
    CHECK_FALSE(c8.ample2);

    const Membership q3 = membership(gen::hypercube(3));
    CHECK_FALSE(q3.fq3);
    CHECK_FALSE(q3.com2.has_value());
}

TEST_CASE("pc-minors")
{
    CHECK(contains_pc_minor(gen::hypercube(4), gen::hypercube(3)));
    CHECK_FALSE(contains_pc_minor(gen::cycle(6), gen::hypercube(3)));
    CHECK(contains_pc_minor(gen::full_subdivision(4), gen::cycle(6)));
    CHECK(contains_pc_minor(gen::hypercube(3), gen::hypercube(2)));
    CHECK_THROWS_AS(contains_pc_minor(gen::hypercube(6), gen::hypercube(3), MinorSearchOptions{10}), Error);

    for (const CubeGraph& g : small_graphs()) {
        CHECK(is_two_dimensional(g) == !contains_pc_minor(g, gen::hypercube(3)));
        const Membership mem = membership(g);
        if (mem.fq3) {
            CHECK(*mem.com2 == !contains_pc_minor(g, gen::full_subdivision(4)));
            CHECK(mem.ample2 == !contains_pc_minor(g, gen::cycle(6)));
        }
    }
}

TEST_CASE("excluded families are partial cubes")
{
    CHECK(isomorphic(gen::xfamily(4, 1), gen::full_subdivision(4)));
    CHECK_FALSE(isomorphic(gen::xfamily(4, 2), gen::full_subdivision_star(4)));
    for (int m = 4; m <= 5; ++m) {
        for (int i = 1; i <= m + 1; ++i) {
            const CubeGraph x = gen::xfamily(m, i);
            CHECK(x.size() == (std::size_t{1} << m) - 2 - static_cast<std::size_t>(m + 1 - i));
        }
    }
    CHECK(gen::cube_minus_minus(4).size() == 14);
    CHECK_THROWS_AS(gen::xfamily(3, 1), Error);
    CHECK_THROWS_AS(gen::xfamily(4, 6), Error);
}

namespace {

// Tope graph of a COM: every antipodal interval is gated.
bool naive_com(const CubeGraph& g)
{
    for (VertexId u = 0; u < g.size(); ++u) {
        for (VertexId v = u; v < g.size(); ++v) {
            const VertexSet span = testing::bfs_interval(g, u, v);
            const Label flip = g.label(u) ^ g.label(v);
            const bool antipodal = std::all_of(span.begin(), span.end(), [&](VertexId x) {
                const auto y = g.find(g.label(x) ^ flip);
                return y && set_contains(span, *y);
            });
            if (antipodal && !is_gated(g, span)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("excluded families are minimal non-COMs")
{
    for (int m = 4; m <= 5; ++m) {
        for (int i = 1; i <= m + 1; ++i) {
            const CubeGraph x = gen::xfamily(m, i);
            CHECK_FALSE(naive_com(x));
            for (int c = 0; c < m; ++c) {
                CHECK(naive_com(contract(x, c)));
                CHECK(naive_com(restrict(x, c, false)));
                CHECK(naive_com(restrict(x, c, true)));
            }
        }
    }
    CHECK_FALSE(naive_com(gen::full_subdivision(4)));
    CHECK(naive_com(gen::full_subdivision_star(4)));
    CHECK(naive_com(gen::cube_minus(3)));
}
