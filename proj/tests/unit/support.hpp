#ifndef PCUBE_TESTS_SUPPORT_HPP
#define PCUBE_TESTS_SUPPORT_HPP

// Small helpers shared by the unit tests. Distances here come from plain BFS
// on the adjacency lists, never from labels, so they can check label logic.

#include <deque>
#include <initializer_list>
#include <string>
#include <vector>

#include "pcube/core.hpp"
#include "pcube/recognition.hpp"

namespace testing {

using namespace pcube;

/// Label from 1-based coordinate numbers, e.g. L({1, 3}).
inline Label L(std::initializer_list<int> coords)
{
    Label l;
    for (int c : coords) l = l.with(c - 1, true);
    return l;
}

inline CubeGraph graph_of(int m, std::initializer_list<std::initializer_list<int>> sets)
{
    std::vector<Label> labels;
    for (auto s : sets) labels.push_back(L(s));
    return CubeGraph::from_labels(m, labels);
}

inline std::vector<std::vector<int>> bfs_distances(const AbstractGraph& g)
{
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, -1));
    for (VertexId s = 0; s < g.n; ++s) {
        std::deque<VertexId> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            for (VertexId y : g.adj[x]) {
                if (d[s][y] < 0) {
                    d[s][y] = d[s][x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    return d;
}

inline std::vector<std::vector<int>> bfs_distances(const CubeGraph& g) { return bfs_distances(to_abstract(g)); }

/// Vertices on shortest u-v paths, from BFS distances.
inline VertexSet bfs_interval(const CubeGraph& g, VertexId u, VertexId v)
{
    const auto d = bfs_distances(g);
    VertexSet out;
    for (VertexId w = 0; w < g.size(); ++w) {
        if (d[u][w] + d[w][v] == d[u][v]) out.push_back(w);
    }
    return out;
}

inline AbstractGraph abstract_cycle(std::size_t n)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return AbstractGraph::from_edges(n, edges);
}

inline AbstractGraph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < a; ++i) {
        for (VertexId j = 0; j < b; ++j) edges.emplace_back(i, static_cast<VertexId>(a + j));
    }
    return AbstractGraph::from_edges(a + b, edges);
}

} // namespace testing

#endif
