#ifndef PCUBE_RECOGNITION_HPP
#define PCUBE_RECOGNITION_HPP

#include <utility>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// A simple undirected graph on vertices 0..n-1, before any embedding is known.
struct AbstractGraph {
    std::size_t n = 0;
    std::vector<std::vector<VertexId>> adj;  // sorted

    /// Throws Error{InvalidArgument} on loops, repeated edges or ids >= n.
    static AbstractGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);
    std::size_t edge_count() const;
};

/// The Q_m-neighbor graph of a partial cube, with vertex ids preserved.
AbstractGraph to_abstract(const CubeGraph& g);

struct Recognition {
    CubeGraph graph;
    /// Label of each abstract vertex.
    std::vector<Label> labels;
    /// Graph vertex id of each abstract vertex.
    std::vector<VertexId> vertex_of;
};

/// Evidence attached to a failed recognition. For NotBipartite, `cycle` is an
/// odd cycle. For HalfspaceNotConvex, `edge` is uv and `path` is a shortest
/// path between two vertices of W(u,v) that passes outside W(u,v).
struct RecognitionWitness {
    std::vector<VertexId> cycle;
    std::pair<VertexId, VertexId> edge{0, 0};
    std::vector<VertexId> path;
};

class RecognitionError : public Error {
public:
    RecognitionError(Errc code, const std::string& what, RecognitionWitness witness)
        : Error(code, what), witness_(std::move(witness))
    {
    }
    const RecognitionWitness& witness() const { return witness_; }

private:
    RecognitionWitness witness_;
};

/// Embeds a connected graph isometrically into a hypercube. Vertex 0 gets the
/// empty label; coordinates are numbered in the order their classes are met
/// when scanning edges (u, v), u < v, by increasing u and then v.
/// Throws Error{NotConnected}, RecognitionError{NotBipartite} or
/// RecognitionError{HalfspaceNotConvex}.
Recognition recognize(const AbstractGraph& g);

} // namespace pcube

#endif
