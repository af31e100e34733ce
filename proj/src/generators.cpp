#include "pcube/generators.hpp"

#include <algorithm>
#include <string>

namespace pcube::gen {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(Errc::BadParams, what);
}

std::vector<Label> all_labels(int m)
{
    std::vector<Label> out;
    out.reserve(std::size_t{1} << m);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m); ++b) out.emplace_back(b);
    return out;
}

std::vector<Label> without(std::vector<Label> labels, const std::vector<Label>& drop)
{
    std::erase_if(labels, [&](Label l) { return std::find(drop.begin(), drop.end(), l) != drop.end(); });
    return labels;
}

} // namespace

CubeGraph hypercube(int m)
{
    require(m >= 0 && m <= 20, "hypercube dimension must be in [0, 20]");
    return CubeGraph::from_labels(m, all_labels(m));
}

CubeGraph cycle(int length)
{
    require(length >= 4 && length % 2 == 0 && length / 2 <= kMaxDimension,
            "cycle length must be even and in [4, 128]");
    const int k = length / 2;
    std::vector<Label> labels;
    Label l;
    for (int i = 0; i < k; ++i) {
        labels.push_back(l);
        l = l.with(i, true);
    }
    for (int i = 0; i < k; ++i) {
        labels.push_back(l);
        l = l.with(i, false);
    }
    return CubeGraph::from_labels(k, std::move(labels));
}

CubeGraph path(int n)
{
    require(n >= 1 && n - 1 <= kMaxDimension, "path length must be in [1, 65]");
    std::vector<Label> labels;
    Label l;
    for (int i = 0; i < n; ++i) {
        labels.push_back(l);
        if (i + 1 < n) l = l.with(i, true);
    }
    return CubeGraph::from_labels(n - 1, std::move(labels));
}

CubeGraph star(int leaves)
{
    require(leaves >= 1 && leaves <= kMaxDimension, "star needs between 1 and 64 leaves");
    std::vector<Label> labels{Label{}};
    for (int i = 0; i < leaves; ++i) labels.push_back(Label::unit(i));
    return CubeGraph::from_labels(leaves, std::move(labels));
}

CubeGraph cube_minus(int m)
{
    require(m >= 1 && m <= 20, "dimension must be in [1, 20]");
    return CubeGraph::from_labels(m, without(all_labels(m), {Label::full(m)}));
}

CubeGraph cube_minus_minus(int m)
{
    require(m >= 3 && m <= 20, "dimension must be in [3, 20]");
    return CubeGraph::from_labels(m, without(all_labels(m), {Label{}, Label::full(m)}));
}

CubeGraph full_subdivision(int n)
{
    require(n >= 2 && n <= kMaxDimension, "full subdivision order must be in [2, 64]");
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(Label::unit(i));
        for (int j = i + 1; j < n; ++j) labels.push_back(Label::unit(i) | Label::unit(j));
    }
    return CubeGraph::from_labels(n, std::move(labels));
}

CubeGraph full_subdivision_star(int n)
{
    require(n >= 2 && n <= kMaxDimension, "full subdivision order must be in [2, 64]");
    const CubeGraph base = full_subdivision(n);
    std::vector<Label> labels(base.labels().begin(), base.labels().end());
    labels.push_back(Label{});
    return CubeGraph::from_labels(n, std::move(labels));
}

CubeGraph xfamily(int m, int i)
{
    require(m >= 4 && m <= 20, "xfamily needs 4 <= m <= 20");
    require(i >= 1 && i <= m + 1, "xfamily needs 1 <= i <= m + 1");
    // Q_m minus 0 and (1,...,1,0), then e_m, then e_k + e_m for k <= m - i.
    std::vector<Label> drop{Label{}, Label::full(m - 1)};
    if (i <= m) drop.push_back(Label::unit(m - 1));
    for (int k = 1; k <= m - i; ++k) drop.push_back(Label::unit(k - 1) | Label::unit(m - 1));
    return CubeGraph::from_labels(m, without(all_labels(m), drop));
}

} // namespace pcube::gen
