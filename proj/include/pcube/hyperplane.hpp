#ifndef PCUBE_HYPERPLANE_HPP
#define PCUBE_HYPERPLANE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pcube/core.hpp"
#include "pcube/minors.hpp"

namespace pcube {

/// The hyperplane of class i: the boundary labels with coordinate i deleted,
/// over a universe of size m - 1. Two members are adjacent iff their parent
/// edges lie on a common square, i.e. they differ in one coordinate.
struct Hyperplane {
    int coord = 0;
    SetFamily family;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Throws Error{UnknownCoordinate}.
Hyperplane hyperplane(const CubeGraph& g, int coord);

/// True iff for every pair of coordinates one of the four quadrants is empty
/// on `f`. Equivalent to vc_dimension(f) <= 1.
bool split_compatible(const SetFamily& f);

/// An isometric tree of the hypercube containing the family as vertices.
struct SplitTree {
    int m = 0;
    std::vector<Label> vertices;  // sorted
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Buneman tree of the splits of `f`, with each edge of weight k expanded into
/// a geodesic that flips coordinates in increasing order. Throws
/// Error{NotVCOne} if the splits are not compatible.
SplitTree buneman_tree(const SetFamily& f);

/// Connected, acyclic, isometric in Q_m and containing every member.
bool is_valid_split_tree(const SplitTree& t, const SetFamily& f);

/// A validated split tree if `f` is a virtual isometric tree.
std::optional<SplitTree> virtual_isometric_tree(const SetFamily& f);
bool is_virtual_isometric_tree(const SetFamily& f);

} // namespace pcube

#endif
