#include "pcube/canonical.hpp"

#include <algorithm>
#include <array>

namespace pcube {

namespace {

using CoordKey = std::vector<std::uint32_t>;

// Invariant description of each coordinate relative to a base shift: size of
// the side away from the base, class size, and the sorted quadrant counts
// against every other coordinate.
std::vector<CoordKey> coordinate_keys(const CubeGraph& g, Label shift)
{
    const int m = g.dimension();
    std::vector<CoordKey> keys(static_cast<std::size_t>(m));
    std::vector<std::uint32_t> plus(static_cast<std::size_t>(m), 0), edges(static_cast<std::size_t>(m), 0);
    std::vector<std::uint32_t> both(static_cast<std::size_t>(m * m), 0);
    for (VertexId v = 0; v < g.size(); ++v) {
        const Label l = g.label(v) ^ shift;
        for_each_coordinate(l, [&](int i) {
            ++plus[static_cast<std::size_t>(i)];
            for_each_coordinate(l, [&](int j) { ++both[static_cast<std::size_t>(i * m + j)]; });
        });
        for (const Arc& a : g.neighbors(v)) ++edges[static_cast<std::size_t>(a.coord)];
    }
    for (int i = 0; i < m; ++i) {
        std::vector<std::array<std::uint32_t, 3>> quads;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const std::uint32_t n11 = both[static_cast<std::size_t>(i * m + j)];
            quads.push_back({n11, plus[static_cast<std::size_t>(i)] - n11, plus[static_cast<std::size_t>(j)] - n11});
        }
        std::sort(quads.begin(), quads.end());
        CoordKey& k = keys[static_cast<std::size_t>(i)];
        k.push_back(plus[static_cast<std::size_t>(i)]);
        k.push_back(edges[static_cast<std::size_t>(i)] / 2);
        for (const auto& q : quads) k.insert(k.end(), q.begin(), q.end());
    }
    return keys;
}

std::uint64_t factorial_capped(std::size_t k, std::uint64_t cap)
{
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= i;
        if (f > cap) return cap + 1;
    }
    return f;
}

} // namespace

CanonicalForm canonical_form(const CubeGraph& g, CanonicalOptions opts)
{
    const int m = g.dimension();
    struct Candidate {
        Label shift;
        std::vector<std::vector<int>> groups;
    };

    std::vector<CoordKey> best_sequence;
    std::vector<Candidate> candidates;
    for (VertexId b = 0; b < g.size(); ++b) {
        const Label shift = g.label(b);
        auto keys = coordinate_keys(g, shift);
        std::vector<int> order(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c) order[static_cast<std::size_t>(c)] = c;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return keys[static_cast<std::size_t>(x)] < keys[static_cast<std::size_t>(y)];
        });
        std::vector<CoordKey> sequence;
        sequence.reserve(order.size());
        for (int c : order) sequence.push_back(keys[static_cast<std::size_t>(c)]);
        if (!candidates.empty() && sequence > best_sequence) continue;
        if (candidates.empty() || sequence < best_sequence) {
            best_sequence = sequence;
            candidates.clear();
        }
        Candidate cand{shift, {}};
        for (std::size_t p = 0; p < order.size(); ++p) {
            if (p == 0 || sequence[p] != sequence[p - 1]) cand.groups.emplace_back();
            cand.groups.back().push_back(order[p]);
        }
        candidates.push_back(std::move(cand));
    }

    std::uint64_t total = 0;
    for (const Candidate& c : candidates) {
        std::uint64_t count = 1;
        for (const auto& grp : c.groups) {
            count *= factorial_capped(grp.size(), opts.budget);
            if (count > opts.budget) break;
        }
        total += count;
        if (total > opts.budget) {
            throw Error(Errc::BudgetExceeded, "canonical form needs more than " + std::to_string(opts.budget) +
                                                  " candidate embeddings");
        }
    }

    CanonicalForm best;
    best.m = m;
    bool have = false;
    std::vector<Label> scratch(g.size());
    for (Candidate& c : candidates) {
        for (auto& grp : c.groups) std::sort(grp.begin(), grp.end());
        while (true) {
            std::vector<int> arrangement;
            arrangement.reserve(static_cast<std::size_t>(m));
            for (const auto& grp : c.groups) arrangement.insert(arrangement.end(), grp.begin(), grp.end());
            for (VertexId v = 0; v < g.size(); ++v) {
                const Label l = g.label(v) ^ c.shift;
                std::uint64_t bits = 0;
                for (int p = 0; p < m; ++p) {
                    if (l.has(arrangement[static_cast<std::size_t>(p)])) bits |= std::uint64_t{1} << p;
                }
                scratch[v] = Label{bits};
            }
            std::sort(scratch.begin(), scratch.end());
            if (!have || scratch < best.labels) {
                best.labels = scratch;
                have = true;
            }
            // Odometer over the per-group permutations.
            std::size_t gi = 0;
            for (; gi < c.groups.size(); ++gi) {
                if (std::next_permutation(c.groups[gi].begin(), c.groups[gi].end())) break;
            }
            if (gi == c.groups.size()) break;
        }
    }
    return best;
}

bool isomorphic(const CubeGraph& a, const CubeGraph& b, CanonicalOptions opts)
{
    if (a.dimension() != b.dimension() || a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, opts) == canonical_form(b, opts);
}

CubeGraph relabel(const CubeGraph& g, Label shift, const std::vector<int>& perm)
{
    const int m = g.dimension();
    if (perm.size() != static_cast<std::size_t>(m)) {
        throw Error(Errc::InvalidArgument, "permutation length differs from dimension");
    }
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    for (int p : perm) {
        if (p < 0 || p >= m || used[static_cast<std::size_t>(p)]) {
            throw Error(Errc::InvalidArgument, "not a permutation of the coordinates");
        }
        used[static_cast<std::size_t>(p)] = 1;
    }
    std::vector<Label> out;
    out.reserve(g.size());
    for (Label l : g.labels()) {
        const Label s = l ^ shift;
        Label t;
        for_each_coordinate(s, [&](int c) { t = t.with(perm[static_cast<std::size_t>(c)], true); });
        out.push_back(t);
    }
    return CubeGraph::from_labels(m, std::move(out));
}

std::uint64_t digest(const CanonicalForm& f)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ULL;
        }
    };
    mix(static_cast<std::uint64_t>(f.m));
    for (Label l : f.labels) mix(l.bits());
    return h;
}

} // namespace pcube
