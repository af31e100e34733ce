#ifndef PCUBE_MINORS_HPP
#define PCUBE_MINORS_HPP

#include <optional>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// An arbitrary family of subsets of {0..m-1}; its 1-inclusion graph may be
/// disconnected.
struct SetFamily {
    int m = 0;
    std::vector<Label> members;  // sorted, duplicate-free

    /// Throws Error{InvalidArgument} for members wider than m.
    static SetFamily make(int m, std::vector<Label> members);
    static SetFamily of(const CubeGraph& g);
    std::size_t size() const { return members.size(); }
};

// ---------------------------------------------------------------------------
// Contraction and restriction

/// Contracts class `coord`; higher coordinates shift down. Throws
/// Error{UnknownCoordinate}.
CubeGraph contract(const CubeGraph& g, int coord);
/// Contracts every coordinate in `coords`; the rest keep their relative order.
CubeGraph contract(const CubeGraph& g, Label coords);

/// The halfspace on the given side of `coord`, compacted.
CubeGraph restrict(const CubeGraph& g, int coord, bool positive);
/// Throws Error{EmptyRegion} if no vertex matches.
CubeGraph restrict(const CubeGraph& g, const Region& r);

/// Contraction set plus a region over the same coordinates of the host.
struct MinorSpec {
    Label contract;
    Region region;
};

/// Throws Error{InvalidArgument} if the region fixes a contracted coordinate,
/// Error{EmptyRegion} if the region selects nothing.
CubeGraph apply_minor(const CubeGraph& g, const MinorSpec& spec);

// ---------------------------------------------------------------------------
// Shattering

bool shattered(const SetFamily& f, Label x);
bool strongly_shattered(const SetFamily& f, Label x);

/// All shattered sets (the shattered complex), from the empty set up.
std::vector<Label> shattered_sets(const SetFamily& f);
/// All strongly shattered sets.
std::vector<Label> strongly_shattered_sets(const SetFamily& f);
/// Inclusion-maximal shattered sets.
std::vector<Label> maximal_shattered_sets(const SetFamily& f);

/// Size of a largest shattered set. With `cap`, stops once a shattered set of
/// size `cap` is found and returns cap. Throws Error{InvalidArgument} on an
/// empty family.
int vc_dimension(const SetFamily& f, int cap = kMaxDimension);
int vc_dimension(const CubeGraph& g, int cap = kMaxDimension);

struct AmpleReport {
    std::size_t family_size = 0;
    std::size_t shattered = 0;
    std::size_t strongly_shattered = 0;
    bool ample = false;
};

/// Counts both complexes; throws Error{InvariantViolation} if the sandwich
/// |strongly shattered| <= |F| <= |shattered| fails.
AmpleReport ample_report(const SetFamily& f);
bool is_ample(const SetFamily& f);
bool is_ample(const CubeGraph& g);

/// VC-dimension at most 2, i.e. no shattered triple.
bool is_two_dimensional(const CubeGraph& g);

struct Membership {
    bool fq3 = false;
    /// Rank-two COM; only defined inside F(Q_3).
    std::optional<bool> com2;
    /// Two-dimensional and ample.
    bool ample2 = false;
};

Membership membership(const CubeGraph& g);

struct MinorSearchOptions {
    std::uint64_t budget = std::uint64_t{1} << 20;
};

/// Exhaustive search over restrictions followed by contractions. Throws
/// Error{BudgetExceeded} when more than `budget` candidates would be tested.
bool contains_pc_minor(const CubeGraph& g, const CubeGraph& h, MinorSearchOptions opts = {});

} // namespace pcube

#endif
