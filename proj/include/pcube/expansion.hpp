#ifndef PCUBE_EXPANSION_HPP
#define PCUBE_EXPANSION_HPP

#include <array>
#include <optional>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// Two isometric vertex sets covering every vertex and every edge.
struct IsometricCover {
    VertexSet v1;
    VertexSet v2;
    VertexSet v0;  // v1 ∩ v2
};

/// Validates a cover; the sets need not be sorted. Checks run in the order
/// EdgeNotCovered (including uncovered vertices), NotIsometricPart,
/// EmptyIntersection. Throws Error{UnknownVertex} for ids out of range.
IsometricCover check_cover(const CubeGraph& g, VertexSet v1, VertexSet v2);

struct ExpansionResult {
    CubeGraph graph;
    /// Always the old dimension: the new class is appended.
    int new_coord = 0;
    /// copies[v][s]: the copy of v with the new coordinate equal to s.
    std::vector<std::array<std::optional<VertexId>, 2>> copies;
};

/// V1 goes to the 0-side of the new class, V2 to the 1-side, V0 to both.
ExpansionResult expand(const CubeGraph& g, const IsometricCover& cover);

/// Image of a vertex set under expansion: all copies of its vertices.
VertexSet expansion_image(const ExpansionResult& r, const VertexSet& s);

/// vc(V0) <= d - 1.
bool preserves_dimension(const CubeGraph& g, const IsometricCover& cover, int d);

struct ExpansionStep {
    CubeGraph graph;       // before the step
    IsometricCover cover;  // expands `graph` into the next graph
};

/// Steps from K_1 to g, obtained by contracting the last class repeatedly;
/// step k adds coordinate k.
std::vector<ExpansionStep> expansion_sequence(const CubeGraph& g);

struct CoverOptions {
    std::size_t budget = std::size_t{1} << 20;
};

/// Every valid ordered cover (V1, V2). Throws Error{BudgetExceeded} once more
/// than `budget` candidates have been examined.
std::vector<IsometricCover> enumerate_covers(const CubeGraph& g, CoverOptions opts = {});

} // namespace pcube

#endif
