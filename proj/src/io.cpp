#include "pcube/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "pcube/cells.hpp"
#include "pcube/hyperplane.hpp"
#include "pcube/minors.hpp"

namespace pcube::io {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "pcube/1";

// Colors for edge classes, reused cyclically.
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

json bitstrings(std::span<const Label> labels, int m)
{
    json out = json::array();
    for (Label l : labels) out.push_back(l.to_bitstring(m));
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

} // namespace

GraphDocument GraphDocument::of(const CubeGraph& g)
{
    GraphDocument d;
    d.m = g.dimension();
    d.vertices.assign(g.labels().begin(), g.labels().end());
    return d;
}

CubeGraph GraphDocument::graph() const { return CubeGraph::from_labels(m, vertices); }

json to_json(const GraphDocument& d)
{
    json j{{"format", kFormat}, {"m", d.m}, {"vertices", bitstrings(d.vertices, d.m)}};
    if (!d.names.empty()) j["names"] = d.names;
    return j;
}

GraphDocument document_from_json(const json& j)
{
    try {
        if (!j.is_object()) throw Error(Errc::ParseError, "graph document must be a JSON object");
        if (j.value("format", "") != kFormat) throw Error(Errc::ParseError, "unsupported format, expected pcube/1");
        GraphDocument d;
        d.m = j.at("m").get<int>();
        if (d.m < 0 || d.m > kMaxDimension) throw Error(Errc::ParseError, "m out of range");
        for (const auto& v : j.at("vertices")) {
            const std::string s = v.get<std::string>();
            if (s.size() != static_cast<std::size_t>(d.m)) {
                throw Error(Errc::ParseError, "bitstring '" + s + "' does not have length m");
            }
            d.vertices.push_back(Label::from_bitstring(s));
        }
        std::vector<Label> sorted = d.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(Errc::ParseError, "repeated vertex");
        }
        if (j.contains("names")) {
            d.names = j.at("names").get<std::vector<std::string>>();
            if (d.names.size() != d.vertices.size()) throw Error(Errc::ParseError, "names and vertices differ in length");
        }
        return d;
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

std::string serialize(const CubeGraph& g) { return to_json(GraphDocument::of(g)).dump() + "\n"; }

CubeGraph parse_graph(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return document_from_json(j).graph();
}

AbstractGraph parse_edge_list(std::string_view text)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t n = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        VertexId ids[2];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (VertexId& id : ids) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            const auto [next, ec] = std::from_chars(p, end, id);
            if (ec != std::errc{} || next == p) {
                throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two vertex ids");
            }
            p = next;
        }
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p != end) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": trailing text");
        edges.emplace_back(ids[0], ids[1]);
        n = std::max<std::size_t>(n, std::max(ids[0], ids[1]) + std::size_t{1});
    }
    if (n == 0) throw Error(Errc::ParseError, "edge list is empty");
    try {
        return AbstractGraph::from_edges(n, edges);
    } catch (const Error& e) {
        throw Error(Errc::ParseError, e.what());
    }
}

Input read_input(std::string_view text)
{
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    Input in;
    if (first != std::string_view::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw Error(Errc::ParseError, e.what());
        }
        in.document = document_from_json(j);
        in.graph = in.document.graph();
        return in;
    }
    const AbstractGraph a = parse_edge_list(text);
    const Recognition r = recognize(a);
    in.recognized = true;
    in.graph = r.graph;
    in.document.m = r.graph.dimension();
    in.document.vertices = r.labels;
    for (std::size_t k = 0; k < a.n; ++k) in.document.names.push_back(std::to_string(k));
    return in;
}

std::string to_dot(const CubeGraph& g, std::string_view name)
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    out << "  node [shape=circle, fontsize=10];\n";
    const int m = g.dimension();
    for (VertexId v = 0; v < g.size(); ++v) out << "  v" << v << " [label=\"" << g.label(v).to_bitstring(m) << "\"];\n";
    for (const Edge& e : g.edges()) {
        out << "  v" << e.u << " -- v" << e.v << " [color=\"" << kPalette[e.coord % std::size(kPalette)]
            << "\", label=\"" << e.coord + 1 << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json to_json(const CompletionReport& r)
{
    json steps = json::array();
    int m = r.output.dimension();
    for (const CompletionStep& s : r.steps) {
        json step{{"kind", s.kind == CompletionStep::Kind::OneExtension ? "one-extension" : "cycle-fill"},
                  {"site", bitstrings(s.site, m)},
                  {"added", bitstrings(s.added, m)}};
        if (s.coord >= 0) step["class"] = s.coord + 1;
        steps.push_back(std::move(step));
    }
    return json{{"input_vertices", r.input.size()},
                {"output_vertices", r.output.size()},
                {"one_extensions", r.one_extensions},
                {"one_extension_bound", max_one_extensions(r.input.dimension())},
                {"cycle_fills", r.cycle_fills},
                {"steps", std::move(steps)},
                {"checks",
                 {{"input_isometric", r.input_isometric},
                  {"two_dimensional", r.two_dimensional},
                  {"com2", r.com2},
                  {"ample", r.ample}}}};
}

json to_json(const AmalgamTree& t)
{
    auto cell_name = [](AmalgamNode::Cell c) {
        switch (c) {
        case AmalgamNode::Cell::Vertex: return "vertex";
        case AmalgamNode::Cell::Edge: return "edge";
        case AmalgamNode::Cell::Cycle: return "cycle";
        case AmalgamNode::Cell::FullSubdivision: return "full-subdivision";
        }
        return "?";
    };
    json nodes = json::array();
    for (const AmalgamNode& n : t.nodes) {
        json j{{"vertices", bitstrings(n.vertices, t.m)}, {"children", n.children}};
        switch (n.kind) {
        case AmalgamNode::Kind::Leaf:
            j["kind"] = "leaf";
            j["cell"] = cell_name(n.cell);
            break;
        case AmalgamNode::Kind::Articulation: j["kind"] = "articulation"; break;
        case AmalgamNode::Kind::Split:
            j["kind"] = "split";
            j["class"] = n.coord + 1;
            j["side"] = n.side ? "+" : "-";
            break;
        }
        nodes.push_back(std::move(j));
    }
    return json{{"m", t.m}, {"leaves", t.leaves().size()}, {"nodes", std::move(nodes)}};
}

json analyze(const CubeGraph& g)
{
    json classes = json::array();
    for (const ThetaClass& c : theta_classes(g)) {
        classes.push_back({{"class", c.index + 1},
                           {"edges", c.edges.size()},
                           {"minus", c.negative.size()},
                           {"plus", c.positive.size()}});
    }
    const Membership mem = membership(g);
    json membership_j{{"fq3", mem.fq3}, {"ample", is_ample(g)}, {"ample2", mem.ample2}};
    membership_j["com2"] = mem.com2 ? json(*mem.com2) : json(nullptr);

    std::map<std::size_t, std::size_t> by_length;
    for (const Cycle& c : convex_cycles(g)) ++by_length[c.size()];
    json cycles = json::array();
    for (auto [len, count] : by_length) cycles.push_back({{"length", len}, {"count", count}});

    json subdivisions = json::array();
    for (const FullSubdivision& f : full_subdivisions(g, 4)) {
        subdivisions.push_back({{"n", f.n},
                                {"vertices", bitstrings(g.labels_of(f.vertices), g.dimension())},
                                {"convex", f.convex},
                                {"gated", f.gated},
                                {"extends_to_star", f.extends_to_star}});
    }

    json disk = nullptr;
    if (mem.fq3) {
        if (const auto d = is_disk(g)) disk = {{"boundary_length", d->boundary.size()}, {"antipodal", d->antipodal.size()}};
    }

    json hyperplanes = json::array();
    for (int i = 0; i < g.dimension(); ++i) {
        const Hyperplane h = hyperplane(g, i);
        hyperplanes.push_back({{"class", i + 1},
                               {"size", h.family.size()},
                               {"vc_dimension", vc_dimension(h.family)},
                               {"virtual_tree", is_virtual_isometric_tree(h.family)}});
    }

    return json{{"m", g.dimension()},
                {"vertices", g.size()},
                {"edges", g.edge_count()},
                {"classes", std::move(classes)},
                {"vc_dimension", vc_dimension(g)},
                {"membership", std::move(membership_j)},
                {"convex_cycles", std::move(cycles)},
                {"full_subdivisions", std::move(subdivisions)},
                {"disk", std::move(disk)},
                {"hyperplanes", std::move(hyperplanes)}};
}

std::string analysis_text(const json& r)
{
    std::ostringstream out;
    auto yes = [](const json& b) { return b.is_null() ? "n/a" : (b.get<bool>() ? "yes" : "no"); };
    out << "vertices " << r["vertices"] << ", edges " << r["edges"] << ", classes " << r["m"] << '\n';
    out << "VC-dimension " << r["vc_dimension"] << '\n';
    const json& mem = r["membership"];
    out << "F(Q3) " << yes(mem["fq3"]) << ", COM2 " << yes(mem["com2"]) << ", ample " << yes(mem["ample"])
        << ", ample2 " << yes(mem["ample2"]) << '\n';
    out << "classes:";
    for (const json& c : r["classes"]) {
        out << ' ' << c["class"] << ':' << c["edges"] << '(' << c["minus"] << '/' << c["plus"] << ')';
    }
    out << '\n';
    out << "convex cycles:";
    if (r["convex_cycles"].empty()) out << " none";
    for (const json& c : r["convex_cycles"]) out << ' ' << c["count"] << "xC" << c["length"];
    out << '\n';
    out << "maximal full subdivisions: " << r["full_subdivisions"].size() << '\n';
    for (const json& f : r["full_subdivisions"]) {
        out << "  SK_" << f["n"] << " convex " << yes(f["convex"]) << ", gated " << yes(f["gated"])
            << ", center present " << yes(f["extends_to_star"]) << '\n';
    }
    if (r["disk"].is_null()) {
        out << "disk no\n";
    } else {
        out << "disk yes, boundary length " << r["disk"]["boundary_length"] << '\n';
    }
    out << "hyperplanes:";
    for (const json& h : r["hyperplanes"]) {
        out << ' ' << h["class"] << ":vc" << h["vc_dimension"] << (h["virtual_tree"].get<bool>() ? "/tree" : "");
    }
    out << '\n';
    return out.str();
}

} // namespace pcube::io
