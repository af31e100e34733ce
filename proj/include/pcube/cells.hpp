#ifndef PCUBE_CELLS_HPP
#define PCUBE_CELLS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// Vertices of a cycle in cyclic order, starting at the smallest id and
/// continuing towards its smaller neighbor on the cycle.
using Cycle = std::vector<VertexId>;

/// Rotates and reflects a cyclic vertex sequence into the normal form above.
Cycle normalize_cycle(Cycle c);

/// Every convex cycle of G: intervals I(u, v) inducing a cycle of length 2 d(u, v).
std::vector<Cycle> convex_cycles(const CubeGraph& g);

struct CycleSearchOptions {
    /// Longest cycle length to search; 0 means 2m.
    int max_length = 0;
    /// Limit on search nodes.
    std::uint64_t budget = std::uint64_t{1} << 26;
};

/// Cycles whose cyclic distances equal graph distances, grouped by length.
/// Throws Error{BudgetExceeded}.
std::vector<Cycle> isometric_cycles(const CubeGraph& g, CycleSearchOptions opts = {});
bool is_isometric_cycle(const CubeGraph& g, const Cycle& c);

// ---------------------------------------------------------------------------
// Full subdivisions

/// An induced SK_n. With `center` c, original i is c ^ e_{coords[i]} and the
/// subdivision vertex of originals i < j is c ^ e_{coords[i]} ^ e_{coords[j]};
/// every isometric SK_n has this form.
struct FullSubdivision {
    int n = 0;
    Label center;
    std::vector<int> coords;
    std::vector<VertexId> originals;
    /// Indexed by pair_index(i, j).
    std::vector<VertexId> subdivisions;
    VertexSet vertices;
    bool convex = false;
    bool gated = false;
    /// The center is a vertex of the host.
    bool extends_to_star = false;

    std::size_t pair_index(int i, int j) const;
    VertexId subdivision(int i, int j) const { return subdivisions[pair_index(i, j)]; }
};

/// Inclusion-maximal full subdivisions with n >= n_min, sorted by vertex set.
std::vector<FullSubdivision> full_subdivisions(const CubeGraph& g, int n_min = 4);
/// Every full subdivision with n >= n_min, maximal or not.
std::vector<FullSubdivision> all_full_subdivisions(const CubeGraph& g, int n_min = 3);
/// Recognizes `s` as the vertex set of an SK_n, n >= 3.
std::optional<FullSubdivision> as_full_subdivision(const CubeGraph& g, const VertexSet& s);

/// The host relabeled so that the subdivision is in standard position:
/// originals become {0}..{n-1} and subdivision vertices {i, j}.
struct StandardEmbedding {
    CubeGraph graph;
    Label shift;
    /// Coordinate c of the host becomes coordinate perm[c].
    std::vector<int> perm;
};

/// Throws Error{NotFullSubdivision} if `h` does not describe an SK_n of g.
StandardEmbedding standardize(const CubeGraph& g, const FullSubdivision& h);

// ---------------------------------------------------------------------------
// Disks and antipodes

struct Disk {
    VertexSet vertices;
    /// Boundary cycle in cyclic order.
    Cycle boundary;
    /// Vertices of the disk with an antipode in the disk.
    VertexSet antipodal;
};

/// The vertex with complementary label, if present.
std::optional<VertexId> antipode(const CubeGraph& g, VertexId v);
VertexSet antipodal_vertices(const CubeGraph& g);

/// Disk structure of the whole graph, if it has one. Throws
/// Error{InvariantViolation} if a disk's antipodal set differs from its boundary.
std::optional<Disk> is_disk(const CubeGraph& g);
/// Disk structure of the subgraph induced by s.
std::optional<Disk> is_disk(const CubeGraph& g, const VertexSet& s);

/// A boundary pair (w, -w) such that no class crosses both I(w, u) and
/// I(v, -w). Throws Error{NotADisk} if `d` is not a disk of g.
std::optional<std::pair<VertexId, VertexId>> affine_witness(const CubeGraph& g, const Disk& d, VertexId u,
                                                            VertexId v);

// ---------------------------------------------------------------------------
// Gated hulls of isometric cycles

struct CycleClassification {
    enum class Kind { ConvexCycle, QThreeMinus, FullSubdivision, GatedDisk };
    Kind kind = Kind::ConvexCycle;
    VertexSet gated_hull;
    std::optional<FullSubdivision> subdivision;
    std::optional<Disk> disk;
};

/// Throws Error{HostNotTwoDimensional}, Error{NotIsometric}, or
/// Error{InvariantViolation} if the hull has none of the expected shapes.
CycleClassification classify_isometric_cycle(const CubeGraph& g, const Cycle& c);

} // namespace pcube

#endif
