#include "pcube/minors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pcube/canonical.hpp"
#include "pcube/cells.hpp"

namespace pcube {

namespace {

void require_coordinate(const CubeGraph& g, int coord)
{
    if (coord < 0 || coord >= g.dimension()) {
        throw Error(Errc::UnknownCoordinate, "coordinate " + std::to_string(coord) + " not in graph");
    }
}

// Collects every set of the simplicial complex defined by `pred`, level by
// level; a set is only tested once all its facets are known members.
template <class Pred>
std::vector<Label> complex_sets(int m, Pred pred, int cap = kMaxDimension)
{
    std::vector<Label> all;
    if (!pred(Label{})) return all;
    std::vector<Label> level{Label{}};
    all.push_back(Label{});
    for (int size = 1; size <= cap && !level.empty(); ++size) {
        const std::unordered_set<Label> known(level.begin(), level.end());
        std::vector<Label> next;
        for (Label x : level) {
            const int top = x.empty() ? -1 : 63 - std::countl_zero(x.bits());
            for (int c = top + 1; c < m; ++c) {
                const Label y = x.with(c, true);
                bool facets = true;
                for_each_coordinate(x, [&](int d) { facets = facets && known.contains(y.flipped(d)); });
                if (facets && pred(y)) next.push_back(y);
            }
        }
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::uint64_t pow3_capped(int m, std::uint64_t cap)
{
    std::uint64_t p = 1;
    for (int i = 0; i < m; ++i) {
        p *= 3;
        if (p > cap) return cap + 1;
    }
    return p;
}

} // namespace

SetFamily SetFamily::make(int m, std::vector<Label> members)
{
    if (m < 0 || m > kMaxDimension) throw Error(Errc::InvalidArgument, "universe size outside [0, 64]");
    for (Label l : members) {
        if (!l.subset_of(Label::full(m))) throw Error(Errc::InvalidArgument, "member wider than the universe");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SetFamily{m, std::move(members)};
}

SetFamily SetFamily::of(const CubeGraph& g)
{
    return SetFamily{g.dimension(), std::vector<Label>(g.labels().begin(), g.labels().end())};
}

// ---------------------------------------------------------------------------
// Contraction and restriction

CubeGraph contract(const CubeGraph& g, int coord)
{
    require_coordinate(g, coord);
    return contract(g, Label::unit(coord));
}

CubeGraph contract(const CubeGraph& g, Label coords)
{
    if (!coords.subset_of(Label::full(g.dimension()))) {
        throw Error(Errc::UnknownCoordinate, "contraction set names a coordinate outside the graph");
    }
    const Label keep = coords.complement(g.dimension());
    std::vector<Label> labels;
    labels.reserve(g.size());
    for (Label l : g.labels()) labels.push_back(l & keep);
    // Zeroed coordinates are constant, so compaction deletes exactly them.
    return CubeGraph::from_labels(g.dimension(), std::move(labels));
}

CubeGraph restrict(const CubeGraph& g, int coord, bool positive)
{
    require_coordinate(g, coord);
    Region r(g.dimension());
    r.set(coord, positive ? Sign::Plus : Sign::Minus);
    return restrict(g, r);
}

CubeGraph restrict(const CubeGraph& g, const Region& r)
{
    if (r.dimension() != g.dimension()) throw Error(Errc::InvalidArgument, "region dimension differs from graph");
    const VertexSet s = select(g, r);
    if (s.empty()) throw Error(Errc::EmptyRegion, "region selects no vertex");
    return CubeGraph::from_labels(g.dimension(), g.labels_of(s));
}

CubeGraph apply_minor(const CubeGraph& g, const MinorSpec& spec)
{
    if (spec.region.dimension() != g.dimension()) {
        throw Error(Errc::InvalidArgument, "region dimension differs from graph");
    }
    if (!(spec.contract & spec.region.fixed()).empty()) {
        throw Error(Errc::InvalidArgument, "region fixes a contracted coordinate");
    }
    const VertexSet s = select(g, spec.region);
    if (s.empty()) throw Error(Errc::EmptyRegion, "region selects no vertex");
    const Label keep = spec.contract.complement(g.dimension());
    std::vector<Label> labels;
    labels.reserve(s.size());
    for (VertexId v : s) labels.push_back(g.label(v) & keep);
    return CubeGraph::from_labels(g.dimension(), std::move(labels));
}

// ---------------------------------------------------------------------------
// Shattering

bool shattered(const SetFamily& f, Label x)
{
    const int k = x.weight();
    if (k >= 63 || f.size() < (std::size_t{1} << k)) return false;
    std::unordered_set<Label> traces;
    for (Label l : f.members) traces.insert(l & x);
    return traces.size() == (std::size_t{1} << k);
}

bool strongly_shattered(const SetFamily& f, Label x)
{
    const int k = x.weight();
    if (k >= 63 || f.size() < (std::size_t{1} << k)) return false;
    const Label outside = x.complement(f.m);
    std::unordered_map<Label, std::size_t> groups;
    for (Label l : f.members) {
        if (++groups[l & outside] == (std::size_t{1} << k)) return true;
    }
    return false;
}

std::vector<Label> shattered_sets(const SetFamily& f)
{
    return complex_sets(f.m, [&](Label x) { return shattered(f, x); });
}

std::vector<Label> strongly_shattered_sets(const SetFamily& f)
{
    return complex_sets(f.m, [&](Label x) { return strongly_shattered(f, x); });
}

std::vector<Label> maximal_shattered_sets(const SetFamily& f)
{
    const std::vector<Label> all = shattered_sets(f);
    const std::unordered_set<Label> known(all.begin(), all.end());
    std::vector<Label> out;
    for (Label x : all) {
        bool maximal = true;
        for (int c = 0; c < f.m && maximal; ++c) {
            if (!x.has(c) && known.contains(x.with(c, true))) maximal = false;
        }
        if (maximal) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int vc_dimension(const SetFamily& f, int cap)
{
    if (f.members.empty()) throw Error(Errc::InvalidArgument, "VC-dimension of an empty family");
    int best = 0;
    for (Label x : complex_sets(f.m, [&](Label y) { return shattered(f, y); }, cap)) {
        best = std::max(best, x.weight());
    }
    return best;
}

int vc_dimension(const CubeGraph& g, int cap) { return vc_dimension(SetFamily::of(g), cap); }

AmpleReport ample_report(const SetFamily& f)
{
    AmpleReport r;
    r.family_size = f.size();
    r.shattered = shattered_sets(f).size();
    r.strongly_shattered = strongly_shattered_sets(f).size();
    if (r.strongly_shattered > r.family_size || r.family_size > r.shattered) {
        throw Error(Errc::InvariantViolation, "sandwich inequality fails");
    }
    r.ample = r.strongly_shattered == r.shattered;
    return r;
}

bool is_ample(const SetFamily& f) { return ample_report(f).ample; }
bool is_ample(const CubeGraph& g) { return is_ample(SetFamily::of(g)); }

bool is_two_dimensional(const CubeGraph& g) { return vc_dimension(g, 3) <= 2; }

Membership membership(const CubeGraph& g)
{
    Membership out;
    out.fq3 = is_two_dimensional(g);
    if (!out.fq3) return out;
    // A convex SK_4 lies in a maximal SK_n, which is then convex too.
    bool convex_sk4 = false;
    for (const FullSubdivision& h : full_subdivisions(g, 4)) convex_sk4 = convex_sk4 || h.convex;
    out.com2 = !convex_sk4;
    out.ample2 = is_ample(g);
    return out;
}

bool contains_pc_minor(const CubeGraph& g, const CubeGraph& h, MinorSearchOptions opts)
{
    if (h.dimension() > g.dimension() || h.size() > g.size()) return false;
    const int m = g.dimension();
    if (pow3_capped(m, opts.budget) > opts.budget) {
        throw Error(Errc::BudgetExceeded, "too many restrictions to search");
    }
    const CanonicalForm target = canonical_form(h);
    std::uint64_t tested = 0;
    std::set<VertexSet> seen;
    std::vector<int> digits(static_cast<std::size_t>(m), 0);
    while (true) {
        Region r(m);
        for (int c = 0; c < m; ++c) {
            const int dgt = digits[static_cast<std::size_t>(c)];
            r.set(c, dgt == 0 ? Sign::Both : dgt == 1 ? Sign::Minus : Sign::Plus);
        }
        const VertexSet s = select(g, r);
        if (s.size() >= h.size() && seen.insert(s).second) {
            const CubeGraph sub = CubeGraph::from_labels(m, g.labels_of(s));
            const int k = sub.dimension() - h.dimension();
            if (k >= 0) {
                // Contraction sets of size k, in Gosper order.
                const int md = sub.dimension();
                std::uint64_t a = k == 0 ? 0 : (std::uint64_t{1} << k) - 1;
                while (md >= 64 || a < (std::uint64_t{1} << md)) {
                    if (++tested > opts.budget) throw Error(Errc::BudgetExceeded, "pc-minor search exceeds budget");
                    const CubeGraph c = contract(sub, Label{a});
                    if (c.size() == h.size() && c.edge_count() == h.edge_count() && canonical_form(c) == target) {
                        return true;
                    }
                    if (a == 0) break;
                    const std::uint64_t low = a & (~a + 1);
                    const std::uint64_t ripple = a + low;
                    a = (((ripple ^ a) >> 2) / low) | ripple;
                }
            }
        }
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            if (++digits[i] < 3) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    return false;
}

} // namespace pcube
