#ifndef PCUBE_COMPLEX_HPP
#define PCUBE_COMPLEX_HPP

#include <string>
#include <vector>

#include "pcube/cells.hpp"
#include "pcube/core.hpp"

namespace pcube {

/// The 2-complex whose 2-cells are the convex cycles.
struct CellComplex {
    std::size_t vertices = 0;
    /// Same order as CubeGraph::edges().
    std::vector<Edge> edges;
    std::vector<Cycle> cells;
    /// Cells through each edge.
    std::vector<std::vector<std::size_t>> edge_cells;
    /// |E| - |V| + 1.
    std::size_t cycle_rank = 0;
    /// GF(2) rank of the cell boundaries.
    std::size_t cell_rank = 0;
    /// The cell boundaries span the cycle space.
    bool spans = false;
};

CellComplex cell_complex(const CubeGraph& g);

/// Vertices of the cells crossed by class i, plus the endpoints of its edges.
/// Throws Error{UnknownCoordinate}.
VertexSet carrier(const CubeGraph& g, int coord);
/// carrier ∩ the given halfspace.
VertexSet half_carrier(const CubeGraph& g, int coord, bool positive);
/// The opposite halfspace together with half_carrier(g, coord, positive).
VertexSet extended_halfspace(const CubeGraph& g, int coord, bool positive);

enum class ComplexChoice { Cells, CompletedCells };

/// |V| - |E| + |2-cells| of C(G), or of C(G') for the COM completion G'.
long euler_characteristic(const CubeGraph& g, ComplexChoice choice = ComplexChoice::Cells);

struct AmalgamNode {
    enum class Kind { Leaf, Articulation, Split };
    enum class Cell { Vertex, Edge, Cycle, FullSubdivision };
    Kind kind = Kind::Leaf;
    Cell cell = Cell::Vertex;
    /// Labels in the coordinates of the decomposed graph, sorted.
    std::vector<Label> vertices;
    /// Split: the class in the decomposed graph and the side of the part that
    /// is a plain halfspace. Articulation: coord is -1.
    int coord = -1;
    bool side = false;
    /// Split: children[0] is the extended halfspace, children[1] the halfspace.
    std::vector<std::size_t> children;
};

struct AmalgamTree {
    int m = 0;
    /// nodes[0] is the root.
    std::vector<AmalgamNode> nodes;

    std::vector<std::size_t> leaves() const;
};

/// Recursive 2d-amalgam decomposition down to gated cells. Articulation
/// vertices are split first. Throws Error{HostNotTwoDimensional}.
AmalgamTree amalgam_decompose(const CubeGraph& g);

/// Union of the leaves, as a graph over the same universe.
CubeGraph reassemble(const AmalgamTree& t);

/// Conditions (1)-(3) of a 2d-amalgam for parts v1, v2 of g.
bool is_two_dimensional_amalgam(const CubeGraph& g, const VertexSet& v1, const VertexSet& v2);

std::string to_text(const AmalgamTree& t);

} // namespace pcube

#endif
