#include "pcube/hyperplane.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <unordered_map>

namespace pcube {

namespace {

using Bits = std::vector<std::uint64_t>;

Bits complement_bits(Bits b, std::size_t n)
{
    for (auto& w : b) w = ~w;
    if (n % 64 != 0) b.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    return b;
}

bool intersects(const Bits& a, const Bits& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] & b[k]) return true;
    }
    return false;
}

} // namespace

Hyperplane hyperplane(const CubeGraph& g, int coord)
{
    if (coord < 0 || coord >= g.dimension()) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " not in graph");
    }
    std::vector<Label> members;
    for (Label l : g.labels()) {
        if (!l.has(coord) && g.contains(l.flipped(coord))) members.push_back(delete_coordinate(l, coord));
    }
    Hyperplane h;
    h.coord = coord;
    h.family = SetFamily::make(g.dimension() - 1, std::move(members));
    const auto& fm = h.family.members;
    for (std::size_t a = 0; a < fm.size(); ++a) {
        for (int c = 0; c < h.family.m; ++c) {
            const Label other = fm[a].flipped(c);
            if (other < fm[a]) continue;
            const auto it = std::lower_bound(fm.begin(), fm.end(), other);
            if (it != fm.end() && *it == other) h.edges.emplace_back(a, static_cast<std::size_t>(it - fm.begin()));
        }
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

bool split_compatible(const SetFamily& f)
{
    for (int a = 0; a < f.m; ++a) {
        for (int b = a + 1; b < f.m; ++b) {
            unsigned seen = 0;
            for (Label l : f.members) {
                seen |= 1u << (static_cast<unsigned>(l.has(a)) + 2u * static_cast<unsigned>(l.has(b)));
                if (seen == 15u) return false;
            }
        }
    }
    return true;
}

SplitTree buneman_tree(const SetFamily& f)
{
    if (f.members.empty()) throw Error(Errc::InvalidArgument, "empty family");
    if (!split_compatible(f)) throw Error(Errc::NotVCOne, "family has two incompatible splits");
    const std::size_t n = f.size();
    const std::size_t words = (n + 63) / 64;
    const Label base = f.members.front();

    // Coordinates inducing the same bipartition of the members form one group;
    // `far[g]` is the side not holding the first member.
    std::map<Bits, std::size_t> group_of;
    std::vector<Label> group_mask;
    std::vector<Bits> far;
    for (int c = 0; c < f.m; ++c) {
        Bits side(words, 0);
        for (std::size_t k = 0; k < n; ++k) {
            if (f.members[k].has(c) != base.has(c)) side[k / 64] |= std::uint64_t{1} << (k % 64);
        }
        if (std::all_of(side.begin(), side.end(), [](std::uint64_t w) { return w == 0; })) continue;
        auto [it, inserted] = group_of.try_emplace(side, group_mask.size());
        if (inserted) {
            group_mask.emplace_back();
            far.push_back(side);
        }
        group_mask[it->second] = group_mask[it->second].with(c, true);
    }
    const std::size_t groups = group_mask.size();
    std::vector<std::array<Bits, 2>> sides(groups);
    for (std::size_t g = 0; g < groups; ++g) sides[g] = {complement_bits(far[g], n), far[g]};
    // meets[g][h][s][t]: side s of g meets side t of h.
    std::vector<std::vector<std::array<std::array<bool, 2>, 2>>> meets(
        groups, std::vector<std::array<std::array<bool, 2>, 2>>(groups));
    for (std::size_t g = 0; g < groups; ++g) {
        for (std::size_t h = 0; h < groups; ++h) {
            for (int s = 0; s < 2; ++s) {
                for (int t = 0; t < 2; ++t) meets[g][h][s][t] = intersects(sides[g][s], sides[h][t]);
            }
        }
    }

    // Breadth-first search over consistent side choices, one bit per group.
    std::unordered_map<Label, std::size_t> index{{Label{}, 0}};
    std::vector<Label> choices{Label{}};
    std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
    std::vector<std::size_t> edge_group;
    for (std::size_t head = 0; head < choices.size(); ++head) {
        const Label cur = choices[head];
        for (std::size_t g = 0; g < groups; ++g) {
            const Label next = cur.flipped(static_cast<int>(g));
            if (index.contains(next)) continue;
            const int s = next.has(static_cast<int>(g)) ? 1 : 0;
            bool ok = true;
            for (std::size_t h = 0; h < groups && ok; ++h) {
                if (h != g) ok = meets[g][h][s][next.has(static_cast<int>(h)) ? 1 : 0];
            }
            if (!ok) continue;
            index.emplace(next, choices.size());
            tree_edges.emplace_back(head, choices.size());
            edge_group.push_back(g);
            choices.push_back(next);
        }
    }

    auto label_of = [&](Label choice) {
        Label l = base;
        for_each_coordinate(choice, [&](int g) { l ^= group_mask[static_cast<std::size_t>(g)]; });
        return l;
    };
    std::vector<Label> labels;
    std::vector<std::pair<Label, Label>> label_edges;
    for (Label c : choices) labels.push_back(label_of(c));
    for (std::size_t e = 0; e < tree_edges.size(); ++e) {
        Label cur = labels[tree_edges[e].first];
        for_each_coordinate(group_mask[edge_group[e]], [&](int c) {
            const Label next = cur.flipped(c);
            if (next != labels[tree_edges[e].second]) labels.push_back(next);
            label_edges.emplace_back(cur, next);
            cur = next;
        });
    }

    SplitTree t;
    t.m = f.m;
    t.vertices = labels;
    std::sort(t.vertices.begin(), t.vertices.end());
    auto id = [&](Label l) {
        return static_cast<std::size_t>(std::lower_bound(t.vertices.begin(), t.vertices.end(), l) - t.vertices.begin());
    };
    for (const auto& [a, b] : label_edges) t.edges.emplace_back(std::min(id(a), id(b)), std::max(id(a), id(b)));
    std::sort(t.edges.begin(), t.edges.end());
    if (!is_valid_split_tree(t, f)) throw Error(Errc::InvariantViolation, "split tree failed validation");
    return t;
}

bool is_valid_split_tree(const SplitTree& t, const SetFamily& f)
{
    const std::size_t n = t.vertices.size();
    if (n == 0 || !std::is_sorted(t.vertices.begin(), t.vertices.end()) ||
        std::adjacent_find(t.vertices.begin(), t.vertices.end()) != t.vertices.end()) {
        return false;
    }
    if (t.edges.size() + 1 != n) return false;
    for (Label l : f.members) {
        if (!std::binary_search(t.vertices.begin(), t.vertices.end(), l)) return false;
    }
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : t.edges) {
        if (a >= n || b >= n || hamming(t.vertices[a], t.vertices[b]) != 1) return false;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // n - 1 edges plus connectivity makes a tree; isometry is checked per source.
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::deque<std::size_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t y : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] != hamming(t.vertices[s], t.vertices[v])) return false;
        }
    }
    return true;
}

std::optional<SplitTree> virtual_isometric_tree(const SetFamily& f)
{
    if (f.members.empty() || !split_compatible(f)) return std::nullopt;
    return buneman_tree(f);
}

bool is_virtual_isometric_tree(const SetFamily& f) { return virtual_isometric_tree(f).has_value(); }

} // namespace pcube
