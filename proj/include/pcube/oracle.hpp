#ifndef PCUBE_ORACLE_HPP
#define PCUBE_ORACLE_HPP

// Brute-force ground truth for small inputs. Nothing here uses the label
// shortcuts of the production code: distances come from BFS on the
// adjacency lists and isomorphism from direct backtracking.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pcube/canonical.hpp"
#include "pcube/core.hpp"
#include "pcube/minors.hpp"
#include "pcube/recognition.hpp"

namespace pcube::oracle {

struct Corpus {
    int m = 0;
    std::size_t n_max = 0;
    /// "exhaustive" or "sampled:<seed>".
    std::string source;
    /// Canonically labeled and sorted by (size, canonical form).
    std::vector<CubeGraph> graphs;
};

struct EnumerationOptions {
    /// Vertex subsets examined.
    std::uint64_t budget = std::uint64_t{1} << 20;
};

/// Every partial cube isometric in Q_m with at most n_max vertices, one per
/// isomorphism class. Requires 1 <= m <= 4. Throws Error{BadParams} or
/// Error{BudgetExceeded}.
Corpus enumerate_partial_cubes(int m, std::size_t n_max, EnumerationOptions opts = {});

/// `count` random partial cubes of Q_m grown from random vertex subsets.
/// Duplicates up to isomorphism are possible; order follows the RNG.
Corpus sample_partial_cubes(int m, std::size_t count, std::uint64_t seed);

/// Digest over the canonical forms of the corpus, in order.
std::uint64_t corpus_digest(const Corpus& c);

/// Versioned JSON cache {"format":"pcube-corpus/1", ...}. load_corpus returns
/// nullopt if the file is missing, of another version or fails its digest.
void save_corpus(const Corpus& c, const std::filesystem::path& file);
std::optional<Corpus> load_corpus(const std::filesystem::path& file);

/// Loads `dir/corpus-m<m>-n<n_max>.json` or enumerates and writes it.
Corpus cached_corpus(int m, std::size_t n_max, const std::filesystem::path& dir);

// ---------------------------------------------------------------------------
// Definition-level predicates

struct NaiveOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;
};

/// All-pairs BFS distances of the adjacency structure.
std::vector<std::vector<int>> bfs_distances(const CubeGraph& g);

/// s contains every vertex on every shortest path between two of its vertices.
bool naive_is_convex(const CubeGraph& g, const VertexSet& s);
/// Every vertex has some x in s with d(v, y) = d(v, x) + d(x, y) for all y in s.
bool naive_is_gated(const CubeGraph& g, const VertexSet& s);
/// Every subset of x occurs as the trace of some member.
bool naive_shattered(const SetFamily& f, Label x);
/// Isomorphism of abstract graphs by backtracking. Throws Error{BudgetExceeded}.
bool naive_isomorphic(const AbstractGraph& a, const AbstractGraph& b, NaiveOptions opts = {});
/// h is isomorphic to some contraction of some nonempty region of g.
/// Throws Error{BudgetExceeded}.
bool naive_pc_minor(const CubeGraph& g, const CubeGraph& h, NaiveOptions opts = {});

} // namespace pcube::oracle

#endif
