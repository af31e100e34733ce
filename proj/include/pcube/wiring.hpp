#ifndef PCUBE_WIRING_HPP
#define PCUBE_WIRING_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// A pseudoline arrangement drawn as a wiring diagram. Positions are 1-based
/// from the bottom. A crossing reverses the block of lines at positions
/// lo..hi; hi = lo + 1 is an ordinary crossing, a longer block is a point
/// where hi - lo + 1 lines meet.
struct WiringCrossing {
    int lo = 1;
    int hi = 2;

    friend bool operator==(const WiringCrossing&, const WiringCrossing&) = default;
};

struct WiringDiagram {
    int lines = 0;
    /// Crossings of each column; blocks inside a column are disjoint.
    std::vector<std::vector<WiringCrossing>> columns;

    friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

/// Text format: a header "lines: L", then one column per line listing its
/// crossings as "p" (positions p and p+1) or "p-q" (block p..q). A "|" also
/// ends a column, so "1 | 2 | 1" is three columns. Blank lines and text after
/// '#' are ignored. Throws Error{ParseError}.
WiringDiagram parse_wiring(std::string_view text);
std::string to_text(const WiringDiagram& w);

/// Throws Error{InvalidDiagram} unless every pair of lines crosses exactly once
/// and each column's blocks are disjoint and in range.
void validate(const WiringDiagram& w);

/// Region graph of the arrangement. Line k (starting at position k + 1) is
/// coordinate k; a region's label has bit k set iff it lies above line k.
struct WiringRegions {
    CubeGraph graph;
    /// The unbounded regions, i.e. the gaps left of the first and right of
    /// the last column.
    VertexSet unbounded;
};

WiringRegions wiring_regions(const WiringDiagram& w);
/// The region graph, checked to be a disk. Throws Error{InvalidDiagram} or
/// Error{InvariantViolation}.
CubeGraph disk_from_wiring(const WiringDiagram& w);

/// A random simple or degenerate arrangement of `lines` pseudolines. With
/// probability `concurrency` a crossing may merge a longer reversible block.
WiringDiagram random_wiring(int lines, std::mt19937_64& rng, double concurrency = 0.2);

} // namespace pcube

#endif
