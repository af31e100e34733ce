// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pcube/canonical.hpp"
#include "pcube/cells.hpp"
#include "pcube/complex.hpp"
#include "pcube/completion.hpp"
#include "pcube/expansion.hpp"
#include "pcube/generators.hpp"
#include "pcube/hyperplane.hpp"
#include "pcube/minors.hpp"
#include "pcube/oracle.hpp"
#include "pcube/recognition.hpp"
#include "pcube/wiring.hpp"

using namespace pcube;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates violations; keeps the first few messages.
class Tally {
public:
    void check(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        ++violations_;
        if (violations_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
    }
    std::size_t checks() const { return checks_; }
    std::size_t violations() const { return violations_; }
    Outcome outcome(const std::string& summary) const
    {
        std::ostringstream out;
        out << summary << ", " << checks_ << " checks, " << violations_ << " violations";
        if (!first_.empty()) out << " [" << first_ << "]";
        return {violations_ == 0, out.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t violations_ = 0;
    std::string first_;
};

struct Corpora {
    oracle::Corpus small;    // exhaustive, m <= 3
    oracle::Corpus full;     // exhaustive, m <= 4
    oracle::Corpus sampled;  // random m = 4
    std::vector<CubeGraph> two_dimensional;
    /// Larger two-dimensional graphs checked alongside the corpus.
    std::vector<CubeGraph> extra;
};

const Corpora& corpora()
{
    static const Corpora c = [] {
        Corpora out;
        out.small = oracle::enumerate_partial_cubes(3, 8);
        out.full = oracle::enumerate_partial_cubes(4, 16);
        out.sampled = oracle::sample_partial_cubes(4, 1000, 20261014);
        for (const CubeGraph& g : out.full.graphs) {
            if (is_two_dimensional(g)) out.two_dimensional.push_back(g);
        }
        out.extra = {gen::cycle(10), gen::full_subdivision(5), gen::full_subdivision_star(5)};
        std::mt19937_64 rng(5);
        for (int k = 0; k < 20; ++k) out.extra.push_back(wiring_regions(random_wiring(5, rng, 0.3)).graph);
        for (const CubeGraph& g : oracle::sample_partial_cubes(5, 400, 5).graphs) {
            if (is_two_dimensional(g) && g.size() <= 20) out.extra.push_back(g);
        }
        return out;
    }();
    return c;
}

std::vector<const CubeGraph*> two_dimensional_inputs()
{
    std::vector<const CubeGraph*> out;
    for (const CubeGraph& g : corpora().two_dimensional) out.push_back(&g);
    for (const CubeGraph& g : corpora().extra) out.push_back(&g);
    return out;
}

std::string name_of(const CubeGraph& g)
{
    std::ostringstream out;
    out << "graph(m=" << g.dimension() << ",n=" << g.size() << ")";
    return out.str();
}

AbstractGraph shuffled(const CubeGraph& g, std::uint64_t seed)
{
    const AbstractGraph a = to_abstract(g);
    std::vector<VertexId> perm(a.n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < a.n; ++u) {
        for (VertexId v : a.adj[u]) {
            if (u < v) edges.emplace_back(perm[u], perm[v]);
        }
    }
    return AbstractGraph::from_edges(a.n, edges);
}

bool adjacent(const AbstractGraph& g, VertexId a, VertexId b)
{
    return std::binary_search(g.adj[a].begin(), g.adj[a].end(), b);
}

std::vector<std::vector<int>> distances(const AbstractGraph& g)
{
    const std::size_t n = g.n;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
    for (VertexId s = 0; s < n; ++s) {
        std::vector<VertexId> q{s};
        d[s][s] = 0;
        for (std::size_t h = 0; h < q.size(); ++h) {
            for (VertexId y : g.adj[q[h]]) {
                if (d[s][y] < 0) {
                    d[s][y] = d[s][q[h]] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    return d;
}

bool is_plain_cycle(const CubeGraph& g, const VertexSet& s)
{
    if (s.size() < 4) return false;
    for (VertexId v : s) {
        int deg = 0;
        for (const Arc& a : g.neighbors(v)) deg += set_contains(s, a.to);
        if (deg != 2) return false;
    }
    return is_connected(g, s);
}

// ---------------------------------------------------------------------------

Outcome recognition()
{
    Tally t;
    const std::vector<std::pair<CubeGraph, int>> yes{
        {gen::hypercube(3), 3},         {gen::cycle(6), 3},        {gen::cycle(8), 4},
        {gen::full_subdivision(4), 4},  {gen::full_subdivision_star(4), 4},
        {gen::cube_minus(3), 3},        {gen::cube_minus_minus(4), 4}};
    std::uint64_t seed = 1;
    for (const auto& [g, dim] : yes) {
        const AbstractGraph a = shuffled(g, seed++);
        try {
            const Recognition r = recognize(a);
            t.check(r.graph.dimension() == dim, name_of(g) + " has dimension " + std::to_string(r.graph.dimension()));
            t.check(isomorphic(r.graph, g), name_of(g) + " recognized as another graph");
            bool edges_ok = true;
            for (VertexId u = 0; u < a.n; ++u) {
                for (VertexId v : a.adj[u]) edges_ok = edges_ok && hamming(r.labels[u], r.labels[v]) == 1;
            }
            t.check(edges_ok, name_of(g) + " labels disagree with edges");
        } catch (const Error& e) {
            t.check(false, name_of(g) + " rejected: " + e.what());
        }
    }

    // C_5: the witness must be an odd closed walk of the input.
    const AbstractGraph c5 = AbstractGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    try {
        recognize(c5);
        t.check(false, "C_5 accepted");
    } catch (const RecognitionError& e) {
        const auto& cyc = e.witness().cycle;
        bool ok = e.code() == Errc::NotBipartite && cyc.size() % 2 == 1;
        for (std::size_t k = 0; ok && k < cyc.size(); ++k) ok = adjacent(c5, cyc[k], cyc[(k + 1) % cyc.size()]);
        t.check(ok, "C_5 witness is not an odd cycle");
    }

    // K_{2,3}: a shortest path between two vertices of W(u,v) leaving W(u,v).
    std::vector<std::pair<VertexId, VertexId>> k23_edges;
    for (VertexId a = 0; a < 2; ++a) {
        for (VertexId b = 2; b < 5; ++b) k23_edges.emplace_back(a, b);
    }
    const AbstractGraph k23 = AbstractGraph::from_edges(5, k23_edges);
    try {
        recognize(k23);
        t.check(false, "K_{2,3} accepted");
    } catch (const RecognitionError& e) {
        const auto& w = e.witness();
        const auto d = distances(k23);
        auto in_w = [&](VertexId x) { return d[w.edge.first][x] < d[w.edge.second][x]; };
        bool ok = e.code() == Errc::HalfspaceNotConvex && adjacent(k23, w.edge.first, w.edge.second) &&
                  w.path.size() >= 3;
        if (ok) {
            ok = in_w(w.path.front()) && in_w(w.path.back()) &&
                 static_cast<int>(w.path.size()) - 1 == d[w.path.front()][w.path.back()];
            for (std::size_t k = 0; ok && k + 1 < w.path.size(); ++k) ok = adjacent(k23, w.path[k], w.path[k + 1]);
            ok = ok && std::any_of(w.path.begin() + 1, w.path.end() - 1, [&](VertexId x) { return !in_w(x); });
        }
        t.check(ok, "K_{2,3} witness does not show a non-convex halfspace");
    }
    return t.outcome("7 partial cubes, C_5 and K_{2,3} rejected");
}

Outcome vc_facts()
{
    Tally t;
    for (int d = 1; d <= 4; ++d) t.check(vc_dimension(gen::hypercube(d)) == d, "vc(Q_" + std::to_string(d) + ")");
    for (int n = 4; n <= 6; ++n) {
        t.check(vc_dimension(gen::full_subdivision(n)) == 2, "vc(SK_" + std::to_string(n) + ")");
        t.check(vc_dimension(gen::full_subdivision_star(n)) == 2, "vc(SK*_" + std::to_string(n) + ")");
    }
    std::vector<Label> even;
    for (std::uint64_t x = 0; x < 16; ++x) {
        if (std::popcount(x) % 2 == 0) even.emplace_back(x);
    }
    const SetFamily f = SetFamily::make(4, even);
    t.check(vc_dimension(f) == 3, "even-weight family");
    int brute = 0;
    for (std::uint64_t x = 0; x < 16; ++x) {
        if (oracle::naive_shattered(f, Label{x})) brute = std::max(brute, std::popcount(x));
    }
    t.check(brute == 3, "even-weight family by brute force");
    return t.outcome("Q_1..Q_4, SK_n and SK*_n for n=4..6, even-weight family");
}

Outcome hyperplanes()
{
    Tally t;
    const CubeGraph q3 = gen::hypercube(3);
    std::vector<const CubeGraph*> graphs;
    for (const CubeGraph& g : corpora().small.graphs) graphs.push_back(&g);
    for (const CubeGraph& g : corpora().sampled.graphs) {
        if (graphs.size() >= corpora().small.graphs.size() + 500) break;
        graphs.push_back(&g);
    }
    std::size_t inside = 0;
    for (const CubeGraph* g : graphs) {
        const bool no_minor = !contains_pc_minor(*g, q3);
        const bool vc2 = is_two_dimensional(*g);
        bool all_vc1 = true;
        bool all_trees = true;
        for (int i = 0; i < g->dimension(); ++i) {
            const Hyperplane h = hyperplane(*g, i);
            all_vc1 = all_vc1 && vc_dimension(h.family) <= 1;
            const auto tree = virtual_isometric_tree(h.family);
            all_trees = all_trees && tree && is_valid_split_tree(*tree, h.family);
        }
        inside += no_minor;
        t.check(no_minor == vc2, name_of(*g) + ": F(Q3) vs VC-dimension");
        t.check(no_minor == all_vc1, name_of(*g) + ": F(Q3) vs hyperplane VC");
        t.check(all_vc1 == all_trees, name_of(*g) + ": hyperplane VC vs trees");
    }
    return t.outcome(std::to_string(graphs.size()) + " graphs (" + std::to_string(inside) + " in F(Q3))");
}

Outcome expansions()
{
    Tally t;
    std::size_t covers = 0;
    std::size_t skipped = 0;
    for (const CubeGraph& g : corpora().two_dimensional) {
        std::vector<IsometricCover> all;
        try {
            all = enumerate_covers(g, {.budget = std::size_t{1} << 22});
        } catch (const Error& e) {
            if (e.code() != Errc::BudgetExceeded) throw;
            ++skipped;
            continue;
        }
        for (const IsometricCover& c : all) {
            ++covers;
            const bool stays = is_two_dimensional(expand(g, c).graph);
            const bool small_v0 = vc_dimension(SetFamily::make(g.dimension(), g.labels_of(c.v0))) <= 1;
            t.check(stays == small_v0, name_of(g) + ": expansion vs vc(V0)");
        }
    }
    return t.outcome(std::to_string(covers) + " covers of " + std::to_string(corpora().two_dimensional.size() - skipped) +
                     " graphs, " + std::to_string(skipped) + " over budget");
}

Outcome structure()
{
    Tally t;
    std::size_t subdivisions = 0, six = 0, long_cycles = 0;
    for (const CubeGraph* gp : two_dimensional_inputs()) {
        const CubeGraph& g = *gp;
        for (const FullSubdivision& f : full_subdivisions(g, 4)) {
            if (!f.convex) continue;
            ++subdivisions;
            t.check(is_gated(g, f.vertices), name_of(g) + ": maximal convex SK_n not gated");
        }
        for (const Cycle& c : isometric_cycles(g)) {
            const VertexSet s = make_set(c);
            if (c.size() == 6) {
                ++six;
                const VertexSet hull = gated_hull(g, s);
                const CubeGraph h = induced_subgraph(g, hull).graph;
                const bool ok = hull == s || isomorphic(h, gen::cube_minus(3)) || as_full_subdivision(g, hull).has_value();
                t.check(ok && is_gated(g, hull), name_of(g) + ": gated hull of a 6-cycle");
            } else if (c.size() >= 8) {
                ++long_cycles;
                const VertexSet conv = convex_hull(g, s).vertices;
                const auto d = is_disk(g, conv);
                t.check(d.has_value() && make_set(d->boundary) == d->antipodal && is_gated(g, conv),
                        name_of(g) + ": hull of a long isometric cycle");
            }
        }
    }
    return t.outcome(std::to_string(subdivisions) + " convex SK_n, " + std::to_string(six) + " 6-cycles, " +
                     std::to_string(long_cycles) + " long cycles over " +
                     std::to_string(two_dimensional_inputs().size()) + " graphs");
}

Outcome disks()
{
    Tally t;
    std::mt19937_64 rng(6);
    std::size_t diagrams = 0;
    for (int lines = 2; lines <= 5; ++lines) {
        for (int k = 0; k < 60; ++k, ++diagrams) {
            const WiringDiagram w = random_wiring(lines, rng, k % 2 == 0 ? 0.0 : 0.4);
            const WiringRegions r = wiring_regions(w);
            const auto d = is_disk(r.graph);
            t.check(d.has_value() && vc_dimension(r.graph) <= 2 && make_set(d->boundary) == r.unbounded,
                    "random diagram with " + std::to_string(lines) + " lines");
        }
    }
    const CubeGraph concurrent = disk_from_wiring(parse_wiring("lines: 3\n1-3\n"));
    t.check(canonical_form(concurrent) == canonical_form(gen::cycle(6)), "3 concurrent lines");
    const CubeGraph generic = disk_from_wiring(parse_wiring("lines: 3\n1\n2\n1\n"));
    t.check(canonical_form(generic) == canonical_form(gen::cube_minus(3)), "3 generic lines");
    return t.outcome(std::to_string(diagrams) + " random diagrams with L<=5");
}

Outcome completions()
{
    Tally t;
    auto check = [&](const CubeGraph& g) {
        const CompletionReport com = com_completion(g);
        const CompletionReport top = ample_completion(g);
        t.check(is_isometric(com.output, com.output.vertex_set(g.labels())), name_of(g) + ": G in completion");
        t.check(is_isometric(top.output, top.output.vertex_set(com.output.labels())), name_of(g) + ": COM in ample");
        t.check(is_ample(top.output), name_of(g) + ": not ample");
        t.check(vc_dimension(top.output) <= 2, name_of(g) + ": dimension grew");
        t.check(com.one_extensions <= max_one_extensions(g.dimension()), name_of(g) + ": too many 1-extensions");
        return top;
    };
    for (const CubeGraph* g : two_dimensional_inputs()) check(*g);
    const auto c6 = check(gen::cycle(6));
    t.check(c6.output.size() == 7 && isomorphic(c6.output, gen::cube_minus(3)), "C_6 completes to Q_3^-");
    const auto c8 = check(gen::cycle(8));
    t.check(c8.output.size() == 11, "C_8 completes to 11 vertices");
    const auto sk4 = check(gen::full_subdivision(4));
    t.check(sk4.output.size() == 11 && sk4.output == gen::full_subdivision_star(4) && sk4.one_extensions == 1,
            "SK_4 completes to SK*_4");
    return t.outcome(std::to_string(two_dimensional_inputs().size()) + " graphs and 3 generators");
}

Outcome carriers()
{
    Tally t;
    for (const CubeGraph* gp : two_dimensional_inputs()) {
        const CubeGraph& g = *gp;
        for (int i = 0; i < g.dimension(); ++i) {
            for (const VertexSet& s : {carrier(g, i), half_carrier(g, i, false), half_carrier(g, i, true),
                                       extended_halfspace(g, i, false), extended_halfspace(g, i, true)}) {
                const bool iso = is_isometric(g, s);
                t.check(iso && is_two_dimensional(induced_subgraph(g, s).graph), name_of(g) + ": class " + std::to_string(i + 1));
            }
        }
    }
    return t.outcome(std::to_string(two_dimensional_inputs().size()) + " graphs");
}

Outcome amalgams()
{
    Tally t;
    std::size_t leaves = 0;
    for (const CubeGraph* gp : two_dimensional_inputs()) {
        const CubeGraph& g = *gp;
        const AmalgamTree tree = amalgam_decompose(g);
        t.check(reassemble(tree) == g, name_of(g) + ": reassembly differs");
        for (std::size_t k : tree.leaves()) {
            ++leaves;
            const AmalgamNode& leaf = tree.nodes[k];
            const VertexSet s = g.vertex_set(leaf.vertices);
            bool shape = false;
            switch (leaf.cell) {
            case AmalgamNode::Cell::Vertex: shape = s.size() == 1; break;
            case AmalgamNode::Cell::Edge: shape = s.size() == 2; break;
            case AmalgamNode::Cell::Cycle: shape = is_plain_cycle(g, s); break;
            case AmalgamNode::Cell::FullSubdivision: shape = as_full_subdivision(g, s).has_value(); break;
            }
            t.check(shape && is_gated(g, s), name_of(g) + ": bad leaf");
        }
    }
    return t.outcome(std::to_string(two_dimensional_inputs().size()) + " graphs, " + std::to_string(leaves) + " leaves");
}

Outcome euler()
{
    Tally t;
    for (const CubeGraph* gp : two_dimensional_inputs()) {
        const CubeGraph& g = *gp;
        t.check(euler_characteristic(g, ComplexChoice::CompletedCells) == 1, name_of(g));
    }
    t.check(euler_characteristic(gen::cycle(6)) == 1, "C_6");
    t.check(euler_characteristic(gen::cube_minus(3)) == 1, "Q_3^-");
    return t.outcome(std::to_string(two_dimensional_inputs().size()) + " graphs, C_6, Q_3^-");
}

Outcome oracles()
{
    Tally t;
    const auto& small = corpora().small.graphs;
    for (const CubeGraph& g : small) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
            VertexSet s;
            for (VertexId v = 0; v < g.size(); ++v) {
                if ((mask >> v) & 1u) s.push_back(v);
            }
            t.check(oracle::naive_is_convex(g, s) == is_convex(g, s), name_of(g) + ": convexity");
            t.check(oracle::naive_is_gated(g, s) == is_gated(g, s), name_of(g) + ": gatedness");
        }
        const SetFamily f = SetFamily::of(g);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.dimension()); ++x) {
            t.check(oracle::naive_shattered(f, Label{x}) == shattered(f, Label{x}), name_of(g) + ": shattering");
        }
        for (const CubeGraph& h : small) {
            t.check(oracle::naive_pc_minor(g, h) == contains_pc_minor(g, h), name_of(g) + ": pc-minor");
        }
    }
    const std::size_t exhaustive = t.checks();

    std::mt19937_64 rng(11);
    std::vector<CubeGraph> targets = small;
    targets.push_back(gen::full_subdivision(4));
    targets.push_back(gen::cycle(8));
    for (const CubeGraph& g : corpora().sampled.graphs) {
        std::uniform_int_distribution<std::uint64_t> pick_mask(1, (std::uint64_t{1} << g.size()) - 1);
        VertexSet s;
        const std::uint64_t mask = pick_mask(rng);
        for (VertexId v = 0; v < g.size(); ++v) {
            if ((mask >> v) & 1u) s.push_back(v);
        }
        t.check(oracle::naive_is_convex(g, s) == is_convex(g, s), name_of(g) + ": convexity");
        t.check(oracle::naive_is_gated(g, s) == is_gated(g, s), name_of(g) + ": gatedness");
        const SetFamily f = SetFamily::of(g);
        const Label x{std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << g.dimension()) - 1)(rng)};
        t.check(oracle::naive_shattered(f, x) == shattered(f, x), name_of(g) + ": shattering");
        const CubeGraph& h = targets[std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng)];
        t.check(oracle::naive_pc_minor(g, h) == contains_pc_minor(g, h), name_of(g) + ": pc-minor");
    }
    return t.outcome(std::to_string(exhaustive) + " exhaustive m<=3 comparisons, " +
                     std::to_string(corpora().sampled.graphs.size()) + " random m=4 cases");
}

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no limit
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "recognition", 1.0, recognition},
        {2, "VC-dimension facts", 1.0, vc_facts},
        {3, "hyperplane equivalence", 60.0, hyperplanes},
        {4, "expansion equivalence", 0.0, expansions},
        {5, "structure theorems", 0.0, structure},
        {6, "disk generator", 0.0, disks},
        {7, "completion", 60.0, completions},
        {8, "carriers", 0.0, carriers},
        {9, "amalgam decomposition", 0.0, amalgams},
        {10, "Euler characteristic", 0.0, euler},
        {11, "differential oracles", 0.0, oracles},
    };
    // Corpora are shared; build them outside the timed sections.
    const auto t0 = std::chrono::steady_clock::now();
    const Corpora& c = corpora();
    std::printf("corpora: %zu graphs with m<=3, %zu with m<=4 (%zu two-dimensional), %zu sampled, %.2f s\n",
                c.small.graphs.size(), c.full.graphs.size(), c.two_dimensional.size(), c.sampled.graphs.size(),
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());

    int failed = 0;
    for (const Criterion& cr : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
            o.pass = false;
            o.detail += ", over the time limit";
        }
        std::printf("[%s] %2d %-24s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.title, secs, o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
