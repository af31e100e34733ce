#ifndef PCUBE_CANONICAL_HPP
#define PCUBE_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "pcube/core.hpp"

namespace pcube {

/// Isomorphism invariant of a partial cube: the lexicographically least sorted
/// label list over all global XOR shifts and coordinate permutations.
/// Two partial cubes are isomorphic exactly when their forms are equal.
struct CanonicalForm {
    int m = 0;
    std::vector<Label> labels;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalOptions {
    /// Upper bound on candidate embeddings examined.
    std::uint64_t budget = std::uint64_t{1} << 22;
};

/// Throws Error{BudgetExceeded} for graphs with very large symmetry groups.
CanonicalForm canonical_form(const CubeGraph& g, CanonicalOptions opts = {});
bool isomorphic(const CubeGraph& a, const CubeGraph& b, CanonicalOptions opts = {});

/// The graph with labels mapped by l -> perm(l ^ shift), where coordinate c
/// of the shifted label becomes coordinate perm[c].
CubeGraph relabel(const CubeGraph& g, Label shift, const std::vector<int>& perm);

/// 64-bit FNV-1a digest of a canonical form.
std::uint64_t digest(const CanonicalForm& f);

} // namespace pcube

#endif
