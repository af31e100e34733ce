#include "pcube/recognition.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace pcube {

namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs(const AbstractGraph& g, VertexId src)
{
    std::vector<int> dist(g.n, kUnreached);
    std::deque<VertexId> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const VertexId at = queue.front();
        queue.pop_front();
        for (VertexId nb : g.adj[at]) {
            if (dist[nb] == kUnreached) {
                dist[nb] = dist[at] + 1;
                queue.push_back(nb);
            }
        }
    }
    return dist;
}

// Walks a shortest path from `from` to `to` using the distance row of `to`.
std::vector<VertexId> geodesic(const AbstractGraph& g, const std::vector<std::vector<int>>& d, VertexId from,
                               VertexId to)
{
    std::vector<VertexId> path{from};
    VertexId at = from;
    while (at != to) {
        for (VertexId nb : g.adj[at]) {
            if (d[nb][to] == d[at][to] - 1) {
                at = nb;
                break;
            }
        }
        path.push_back(at);
    }
    return path;
}

std::vector<VertexId> odd_cycle(const AbstractGraph& g, VertexId a, VertexId b)
{
    // BFS tree from a gives paths a..x; walking both endpoints of the bad edge
    // back to their common ancestor closes an odd cycle.
    std::vector<VertexId> parent(g.n, static_cast<VertexId>(g.n));
    std::vector<int> depth(g.n, kUnreached);
    std::deque<VertexId> queue{0};
    depth[0] = 0;
    while (!queue.empty()) {
        const VertexId at = queue.front();
        queue.pop_front();
        for (VertexId nb : g.adj[at]) {
            if (depth[nb] == kUnreached) {
                depth[nb] = depth[at] + 1;
                parent[nb] = at;
                queue.push_back(nb);
            }
        }
    }
    std::vector<VertexId> left{a}, right{b};
    while (left.back() != right.back()) {
        if (depth[left.back()] >= depth[right.back()]) {
            left.push_back(parent[left.back()]);
        } else {
            right.push_back(parent[right.back()]);
        }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

RecognitionWitness find_nonconvex_halfspace(const AbstractGraph& g, const std::vector<std::vector<int>>& d)
{
    for (VertexId u = 0; u < g.n; ++u) {
        for (VertexId v : g.adj[u]) {
            if (v < u) continue;
            for (const auto& [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                std::vector<VertexId> w, outside;
                for (VertexId x = 0; x < g.n; ++x) {
                    (d[x][a] < d[x][b] ? w : outside).push_back(x);
                }
                for (std::size_t i = 0; i < w.size(); ++i) {
                    for (std::size_t j = i + 1; j < w.size(); ++j) {
                        const VertexId x = w[i], y = w[j];
                        for (VertexId z : outside) {
                            if (d[x][z] + d[z][y] != d[x][y]) continue;
                            RecognitionWitness out;
                            out.edge = {a, b};
                            out.path = geodesic(g, d, x, z);
                            auto rest = geodesic(g, d, z, y);
                            out.path.insert(out.path.end(), rest.begin() + 1, rest.end());
                            return out;
                        }
                    }
                }
            }
        }
    }
    throw Error(Errc::InvariantViolation, "no nonconvex halfspace found in a non-embeddable bipartite graph");
}

} // namespace

AbstractGraph AbstractGraph::from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges)
{
    AbstractGraph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(Errc::InvalidArgument,
                        "edge " + std::to_string(u) + " " + std::to_string(v) + " names a missing vertex");
        }
        if (u == v) throw Error(Errc::InvalidArgument, "loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (VertexId v = 0; v < n; ++v) {
        auto& row = g.adj[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
            throw Error(Errc::InvalidArgument, "repeated edge at vertex " + std::to_string(v));
        }
    }
    return g;
}

std::size_t AbstractGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& row : adj) total += row.size();
    return total / 2;
}

AbstractGraph to_abstract(const CubeGraph& g)
{
    AbstractGraph out;
    out.n = g.size();
    out.adj.assign(g.size(), {});
    for (VertexId v = 0; v < g.size(); ++v) {
        for (const Arc& a : g.neighbors(v)) out.adj[v].push_back(a.to);
        std::sort(out.adj[v].begin(), out.adj[v].end());
    }
    return out;
}

Recognition recognize(const AbstractGraph& g)
{
    if (g.n == 0) throw Error(Errc::InvalidArgument, "graph has no vertices");

    std::vector<std::vector<int>> d(g.n);
    for (VertexId v = 0; v < g.n; ++v) d[v] = bfs(g, v);
    for (VertexId v = 0; v < g.n; ++v) {
        if (d[0][v] == kUnreached) {
            throw Error(Errc::NotConnected, "vertex " + std::to_string(v) + " is unreachable from vertex 0");
        }
    }
    for (VertexId u = 0; u < g.n; ++u) {
        for (VertexId v : g.adj[u]) {
            if (d[0][u] % 2 == d[0][v] % 2) {
                RecognitionWitness w;
                w.edge = {u, v};
                w.cycle = odd_cycle(g, u, v);
                throw RecognitionError(Errc::NotBipartite, "odd cycle of length " + std::to_string(w.cycle.size()),
                                       std::move(w));
            }
        }
    }

    // Assign each edge the class of the first edge (in scan order) that
    // separates its endpoints the same way.
    std::vector<Label> labels(g.n);
    int m = 0;
    bool embeddable = true;
    std::vector<std::vector<int>> edge_class(g.n);
    for (VertexId u = 0; u < g.n; ++u) edge_class[u].assign(g.adj[u].size(), -1);
    auto class_of = [&](VertexId a, VertexId b) -> int& {
        auto it = std::lower_bound(g.adj[a].begin(), g.adj[a].end(), b);
        return edge_class[a][static_cast<std::size_t>(it - g.adj[a].begin())];
    };
    for (VertexId u = 0; u < g.n && embeddable; ++u) {
        for (VertexId v : g.adj[u]) {
            if (v < u || class_of(u, v) >= 0) continue;
            if (m == kMaxDimension) {
                embeddable = false;
                break;
            }
            const int c = m++;
            // Orient so that vertex 0 lies on the negative side.
            const bool u_negative = d[0][u] < d[0][v];
            for (VertexId x = 0; x < g.n; ++x) {
                const bool near_u = d[x][u] < d[x][v];
                if (near_u != u_negative) labels[x] = labels[x].with(c, true);
            }
            for (VertexId x = 0; x < g.n; ++x) {
                for (VertexId y : g.adj[x]) {
                    if (y < x) continue;
                    if ((d[x][u] < d[x][v]) != (d[y][u] < d[y][v])) {
                        int& slot = class_of(x, y);
                        if (slot >= 0) embeddable = false;
                        slot = c;
                        class_of(y, x) = c;
                    }
                }
            }
        }
    }
    if (embeddable) {
        for (VertexId x = 0; x < g.n && embeddable; ++x) {
            for (VertexId y = x + 1; y < g.n; ++y) {
                if (hamming(labels[x], labels[y]) != d[x][y]) {
                    embeddable = false;
                    break;
                }
            }
        }
    }
    if (!embeddable) {
        RecognitionWitness w = find_nonconvex_halfspace(g, d);
        std::string msg = "W(" + std::to_string(w.edge.first) + "," + std::to_string(w.edge.second) +
                          ") is not convex; shortest path";
        for (VertexId p : w.path) msg += " " + std::to_string(p);
        throw RecognitionError(Errc::HalfspaceNotConvex, msg, std::move(w));
    }

    Recognition out;
    out.graph = CubeGraph::from_labels(m, labels);
    out.labels = std::move(labels);
    out.vertex_of.reserve(g.n);
    for (Label l : out.labels) out.vertex_of.push_back(out.graph.at(l));
    return out;
}

} // namespace pcube
