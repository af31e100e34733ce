#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "pcube/canonical.hpp"
#include "pcube/generators.hpp"
#include "pcube/minors.hpp"
#include "pcube/oracle.hpp"
#include "support.hpp"

using namespace pcube;
using namespace pcube::oracle;

namespace {

bool in_corpus(const Corpus& c, const CubeGraph& g)
{
    const CanonicalForm f = canonical_form(g);
    return std::any_of(c.graphs.begin(), c.graphs.end(), [&](const CubeGraph& h) { return canonical_form(h) == f; });
}

VertexSet subset(const CubeGraph& g, std::uint64_t mask)
{
    VertexSet s;
    for (VertexId v = 0; v < g.size(); ++v) {
        if ((mask >> v) & 1u) s.push_back(v);
    }
    return s;
}

} // namespace

TEST_CASE("exhaustive enumeration")
{
    const Corpus one = enumerate_partial_cubes(1, 2);
    CHECK(one.graphs.size() == 2);
    CHECK(one.graphs[0].size() == 1);
    CHECK(one.graphs[1].size() == 2);

    const Corpus two = enumerate_partial_cubes(2, 4);
    REQUIRE(two.graphs.size() == 4);
    CHECK(isomorphic(two.graphs[2], gen::path(3)));
    CHECK(isomorphic(two.graphs[3], gen::hypercube(2)));

    const Corpus three = enumerate_partial_cubes(3, 8);
    for (const CubeGraph& g : {gen::cycle(6), gen::cube_minus(3), gen::hypercube(3), gen::path(4), gen::star(3),
                               gen::path(3), gen::hypercube(1)}) {
        CHECK(in_corpus(three, g));
    }
    CHECK_FALSE(in_corpus(three, gen::cycle(8)));
    std::set<CanonicalForm> forms;
    for (std::size_t k = 0; k < three.graphs.size(); ++k) {
        forms.insert(canonical_form(three.graphs[k]));
        if (k > 0) CHECK(three.graphs[k - 1].size() <= three.graphs[k].size());
        CHECK(three.graphs[k].dimension() <= 3);
    }
    CHECK(forms.size() == three.graphs.size());
    CHECK(enumerate_partial_cubes(3, 8).graphs == three.graphs);
    CHECK(enumerate_partial_cubes(3, 5).graphs.size() < three.graphs.size());

    CHECK_THROWS_AS(enumerate_partial_cubes(5, 10), Error);
    CHECK_THROWS_AS(enumerate_partial_cubes(4, 16, {.budget = 100}), Error);
}

TEST_CASE("corpus cache")
{
    const auto dir = std::filesystem::temp_directory_path() / "pcube-oracle-test";
    std::filesystem::remove_all(dir);
    const Corpus c = cached_corpus(3, 8, dir);
    const auto file = dir / "corpus-m3-n8.json";
    REQUIRE(std::filesystem::exists(file));
    const auto loaded = load_corpus(file);
    REQUIRE(loaded.has_value());
    CHECK(loaded->graphs == c.graphs);
    CHECK(corpus_digest(*loaded) == corpus_digest(c));
    CHECK(cached_corpus(3, 8, dir).graphs == c.graphs);
    {
        std::ofstream out(file);
        out << "{\"format\":\"pcube-corpus/0\"}";
    }
    CHECK_FALSE(load_corpus(file).has_value());
    std::filesystem::remove_all(dir);
}

TEST_CASE("sampling")
{
    const Corpus s = sample_partial_cubes(4, 50, 11);
    CHECK(s.graphs.size() == 50);
    CHECK(sample_partial_cubes(4, 50, 11).graphs == s.graphs);
    for (const CubeGraph& g : s.graphs) CHECK(g.dimension() <= 4);
}

TEST_CASE("naive predicates")
{
    const CubeGraph q3 = gen::hypercube(3);
    for (VertexId v = 0; v < q3.size(); ++v) CHECK(naive_is_gated(q3, {v}));
    CHECK(naive_pc_minor(q3, gen::hypercube(2)));
    CHECK(naive_pc_minor(gen::cycle(6), gen::path(3)));
    CHECK(naive_pc_minor(gen::cycle(6), gen::hypercube(2)));
    CHECK_FALSE(naive_pc_minor(gen::full_subdivision(4), gen::hypercube(3)));
    CHECK(naive_pc_minor(gen::full_subdivision(4), gen::full_subdivision(4)));
    CHECK(naive_isomorphic(testing::complete_bipartite(2, 3), testing::complete_bipartite(3, 2)));
    CHECK_FALSE(naive_isomorphic(testing::abstract_cycle(6), to_abstract(gen::path(6))));
    CHECK_THROWS_AS(naive_pc_minor(gen::hypercube(6), gen::hypercube(3), {.budget = 10}), Error);
}

TEST_CASE("naive predicates agree on m <= 3")
{
    const Corpus three = enumerate_partial_cubes(3, 8);
    const std::vector<CubeGraph> minors{gen::hypercube(1), gen::path(3), gen::hypercube(2), gen::cycle(6),
                                        gen::cube_minus(3), gen::hypercube(3)};
    for (const CubeGraph& g : three.graphs) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.size()); ++mask) {
            const VertexSet s = subset(g, mask);
            CHECK(naive_is_convex(g, s) == is_convex(g, s));
            CHECK(naive_is_gated(g, s) == is_gated(g, s));
        }
        const SetFamily f = SetFamily::of(g);
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << g.dimension()); ++x) {
            CHECK(naive_shattered(f, Label{x}) == shattered(f, Label{x}));
        }
        for (const CubeGraph& h : minors) CHECK(naive_pc_minor(g, h) == contains_pc_minor(g, h));
    }
}
