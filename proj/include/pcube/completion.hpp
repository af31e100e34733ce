#ifndef PCUBE_COMPLETION_HPP
#define PCUBE_COMPLETION_HPP

#include <vector>

#include "pcube/cells.hpp"
#include "pcube/core.hpp"

namespace pcube {

struct CompletionOptions {
    /// Re-check the structural guarantees after every step; a failure throws
    /// Error{InvariantViolation}.
    bool validate = true;
};

/// Adds the vertex adjacent to all originals of `h`, a maximal convex SK_n
/// with n >= 4. Throws Error{HostNotTwoDimensional}, Error{NotConvex},
/// Error{NotMaximal}, or Error{InvalidArgument} for n < 4.
CubeGraph one_extension(const CubeGraph& g, const FullSubdivision& h, CompletionOptions opts = {});

struct FillStep {
    CubeGraph graph;
    std::vector<Label> added;
    /// The cycle shortened by two, in the new graph.
    Cycle next;
};

/// Fills one layer of a gated cycle of length 2k >= 6 along class j: with
/// v_1..v_k the side of the cycle where coordinate j is 0, adds v_i ^ e_j for
/// 2 <= i <= k - 1. Throws Error{CycleTooShort}, Error{NotGated},
/// Error{ClassNotCrossing}, or Error{NotIsometric} if `c` is not a cycle of g.
FillStep cycle_fill_step(const CubeGraph& g, const Cycle& c, int j, CompletionOptions opts = {});

struct CompletionStep {
    enum class Kind { OneExtension, CycleFill };
    Kind kind = Kind::OneExtension;
    /// Labels of the subdivision or of the cycle, in the input graph of the step.
    std::vector<Label> site;
    /// Filling class; -1 for a 1-extension.
    int coord = -1;
    std::vector<Label> added;
};

struct CompletionReport {
    CubeGraph input;
    CubeGraph output;
    std::vector<CompletionStep> steps;
    std::size_t one_extensions = 0;
    std::size_t cycle_fills = 0;
    bool input_isometric = false;
    bool two_dimensional = false;
    bool com2 = false;
    bool ample = false;
};

/// 1-extensions until no maximal convex SK_n (n >= 4) remains. Subdivisions
/// are taken in order of their sorted label lists. Throws
/// Error{HostNotTwoDimensional}.
CompletionReport com_completion(const CubeGraph& g, CompletionOptions opts = {});

/// com_completion followed by cycle filling until every convex cycle is a
/// square. Cycles are taken in order of their sorted label lists, and each is
/// filled along its lowest crossing class.
CompletionReport ample_completion(const CubeGraph& g, CompletionOptions opts = {});

/// 1 + m + m(m - 1) / 2.
std::size_t max_one_extensions(int m);

} // namespace pcube

#endif
