#include "pcube/completion.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pcube/minors.hpp"

namespace pcube {

namespace {

using LabelSet = std::vector<Label>;

void ensure(bool ok, const char* what)
{
    if (!ok) throw Error(Errc::InvariantViolation, what);
}

LabelSet labels_of(const CubeGraph& g, const VertexSet& s)
{
    LabelSet out = g.labels_of(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<LabelSet> convex_subdivisions(const CubeGraph& g, int n_min)
{
    std::set<LabelSet> out;
    for (const FullSubdivision& h : all_full_subdivisions(g, n_min)) {
        if (h.convex) out.insert(labels_of(g, h.vertices));
    }
    return out;
}

std::set<LabelSet> long_convex_cycles(const CubeGraph& g)
{
    std::set<LabelSet> out;
    for (const Cycle& c : convex_cycles(g)) {
        if (c.size() >= 6) out.insert(labels_of(g, make_set(c)));
    }
    return out;
}

bool contains_labels(const CubeGraph& host, std::span<const Label> labels)
{
    return std::all_of(labels.begin(), labels.end(), [&](Label l) { return host.contains(l); });
}

bool embeds_isometrically(const CubeGraph& g, const CubeGraph& host)
{
    return g.dimension() == host.dimension() && contains_labels(host, g.labels()) &&
           is_isometric(host, host.vertex_set(g.labels()));
}

CubeGraph with_labels(const CubeGraph& g, const LabelSet& extra)
{
    std::vector<Label> labels(g.labels().begin(), g.labels().end());
    for (Label l : extra) {
        ensure(!g.contains(l), "added vertex already present");
        labels.push_back(l);
    }
    CubeGraph out = CubeGraph::from_labels(g.dimension(), std::move(labels));
    ensure(out.dimension() == g.dimension(), "completion changed the dimension");
    return out;
}

void finish(CompletionReport& r)
{
    r.input_isometric = embeds_isometrically(r.input, r.output);
    r.two_dimensional = is_two_dimensional(r.output);
    r.com2 = membership(r.output).com2.value_or(false);
    r.ample = is_ample(r.output);
}

} // namespace

std::size_t max_one_extensions(int m)
{
    const auto k = static_cast<std::size_t>(m);
    return 1 + k + k * (k - 1) / 2;
}

CubeGraph one_extension(const CubeGraph& g, const FullSubdivision& h, CompletionOptions opts)
{
    if (h.n < 4) throw Error(Errc::InvalidArgument, "1-extension needs a full subdivision with n >= 4");
    if (!is_two_dimensional(g)) throw Error(Errc::HostNotTwoDimensional, "host has VC-dimension above 2");
    const auto found = as_full_subdivision(g, h.vertices);
    if (!found || found->n != h.n) throw Error(Errc::NotFullSubdivision, "vertex set is not a full subdivision");
    if (!is_convex(g, h.vertices)) throw Error(Errc::NotConvex, "full subdivision is not convex");
    const auto maximal = full_subdivisions(g, 4);
    if (std::none_of(maximal.begin(), maximal.end(), [&](const FullSubdivision& f) { return f.vertices == h.vertices; })) {
        throw Error(Errc::NotMaximal, "full subdivision is contained in a larger one");
    }
    // The second common neighbor of every pair of originals.
    const FullSubdivision& s = *found;
    const Label center = g.label(s.originals[0]) ^ g.label(s.originals[1]) ^ g.label(s.subdivision(0, 1));
    for (int i = 0; i < s.n; ++i) {
        for (int j = i + 1; j < s.n; ++j) {
            const Label c = g.label(s.originals[static_cast<std::size_t>(i)]) ^
                            g.label(s.originals[static_cast<std::size_t>(j)]) ^ g.label(s.subdivision(i, j));
            ensure(c == center, "originals disagree on the new vertex");
        }
    }
    CubeGraph out = with_labels(g, {center});
    if (opts.validate) {
        ensure(is_two_dimensional(out), "1-extension raised the VC-dimension");
        ensure(embeds_isometrically(g, out), "host is not isometric in its 1-extension");
        const auto before = convex_subdivisions(g, 3);
        for (const LabelSet& l : convex_subdivisions(out, 3)) ensure(before.contains(l), "1-extension created a convex SK_r");
        const auto cycles = long_convex_cycles(g);
        for (const LabelSet& l : long_convex_cycles(out)) ensure(cycles.contains(l), "1-extension created a long convex cycle");
    }
    return out;
}

FillStep cycle_fill_step(const CubeGraph& g, const Cycle& c, int j, CompletionOptions opts)
{
    if (c.size() < 6) throw Error(Errc::CycleTooShort, "cycle filling needs length at least 6");
    if (!is_isometric_cycle(g, c)) throw Error(Errc::NotIsometric, "not an isometric cycle of the graph");
    const VertexSet cs = make_set(c);
    if (!is_gated(g, cs)) throw Error(Errc::NotGated, "cycle is not gated");
    const std::size_t len = c.size();
    const std::size_t k = len / 2;
    // Start right after the class-j edge that enters the 0-side.
    std::optional<std::size_t> start;
    for (std::size_t t = 0; t < len; ++t) {
        const Label a = g.label(c[t]);
        const Label b = g.label(c[(t + 1) % len]);
        if ((a ^ b) == Label::unit(j) && a.has(j)) start = (t + 1) % len;
    }
    if (!start) throw Error(Errc::ClassNotCrossing, "class " + std::to_string(j) + " does not cross the cycle");
    std::vector<Label> v(len);
    for (std::size_t t = 0; t < len; ++t) v[t] = g.label(c[(*start + t) % len]);
    for (std::size_t t = 0; t < k; ++t) ensure(!v[t].has(j), "cycle halves are uneven");

    FillStep out;
    for (std::size_t t = 1; t + 1 < k; ++t) out.added.push_back(v[t].flipped(j));
    out.graph = with_labels(g, out.added);
    std::vector<Label> next{v[len - 1]};
    next.insert(next.end(), out.added.begin(), out.added.end());
    for (std::size_t t = k; t + 1 < len; ++t) next.push_back(v[t]);
    for (Label l : next) out.next.push_back(out.graph.at(l));
    out.next = normalize_cycle(std::move(out.next));

    if (opts.validate) {
        ensure(embeds_isometrically(g, out.graph), "host is not isometric after filling");
        ensure(is_isometric_cycle(out.graph, out.next), "shortened cycle is not isometric");
        ensure(is_gated(out.graph, make_set(out.next)), "shortened cycle is not gated");
        if (is_two_dimensional(g)) ensure(is_two_dimensional(out.graph), "filling raised the VC-dimension");
        if (convex_subdivisions(g, 4).empty()) {
            ensure(convex_subdivisions(out.graph, 4).empty(), "filling created a convex full subdivision");
        }
    }
    return out;
}

CompletionReport com_completion(const CubeGraph& g, CompletionOptions opts)
{
    if (!is_two_dimensional(g)) throw Error(Errc::HostNotTwoDimensional, "host has VC-dimension above 2");
    CompletionReport r;
    r.input = g;
    CubeGraph cur = g;
    while (true) {
        std::optional<FullSubdivision> pick;
        LabelSet pick_labels;
        for (const FullSubdivision& h : full_subdivisions(cur, 4)) {
            if (!h.convex) continue;
            LabelSet l = labels_of(cur, h.vertices);
            if (!pick || l < pick_labels) {
                pick = h;
                pick_labels = std::move(l);
            }
        }
        if (!pick) break;
        CubeGraph next = one_extension(cur, *pick, opts);
        CompletionStep step;
        step.kind = CompletionStep::Kind::OneExtension;
        step.site = pick_labels;
        for (Label l : next.labels()) {
            if (!cur.contains(l)) step.added.push_back(l);
        }
        r.steps.push_back(std::move(step));
        ++r.one_extensions;
        ensure(r.one_extensions <= max_one_extensions(g.dimension()), "too many 1-extensions");
        cur = std::move(next);
    }
    r.output = std::move(cur);
    finish(r);
    if (opts.validate) {
        ensure(r.input_isometric, "input is not isometric in its completion");
        ensure(r.two_dimensional, "completion is not two-dimensional");
        ensure(r.com2, "completion is not a rank-two COM");
    }
    return r;
}

CompletionReport ample_completion(const CubeGraph& g, CompletionOptions opts)
{
    CompletionReport r = com_completion(g, opts);
    CubeGraph cur = r.output;
    while (true) {
        std::optional<Cycle> pick;
        LabelSet pick_labels;
        for (const Cycle& c : convex_cycles(cur)) {
            if (c.size() < 6) continue;
            LabelSet l = labels_of(cur, make_set(c));
            if (!pick || l < pick_labels) {
                pick = c;
                pick_labels = std::move(l);
            }
        }
        if (!pick) break;
        int j = kMaxDimension;
        for (std::size_t t = 0; t < pick->size(); ++t) {
            const Label d = cur.label((*pick)[t]) ^ cur.label((*pick)[(t + 1) % pick->size()]);
            j = std::min(j, std::countr_zero(d.bits()));
        }
        FillStep f = cycle_fill_step(cur, *pick, j, opts);
        CompletionStep step;
        step.kind = CompletionStep::Kind::CycleFill;
        for (VertexId v : *pick) step.site.push_back(cur.label(v));
        step.coord = j;
        step.added = f.added;
        r.steps.push_back(std::move(step));
        ++r.cycle_fills;
        cur = std::move(f.graph);
    }
    r.output = std::move(cur);
    finish(r);
    if (opts.validate) {
        ensure(r.input_isometric, "input is not isometric in its completion");
        ensure(r.two_dimensional, "completion is not two-dimensional");
        ensure(r.ample, "completion is not ample");
        ensure(membership(r.output).ample2, "completion is not a two-dimensional ample partial cube");
    }
    return r;
}

} // namespace pcube
