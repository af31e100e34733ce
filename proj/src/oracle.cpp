#include "pcube/oracle.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace pcube::oracle {

namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix bfs_all(const std::vector<std::vector<VertexId>>& adj)
{
    const std::size_t n = adj.size();
    Matrix d(n, std::vector<int>(n, -1));
    for (VertexId s = 0; s < n; ++s) {
        std::deque<VertexId> q{s};
        d[s][s] = 0;
        while (!q.empty()) {
            const VertexId x = q.front();
            q.pop_front();
            for (VertexId y : adj[x]) {
                if (d[s][y] < 0) {
                    d[s][y] = d[s][x] + 1;
                    q.push_back(y);
                }
            }
        }
    }
    return d;
}

std::vector<std::vector<VertexId>> hamming_adjacency(const std::vector<Label>& labels)
{
    std::vector<std::vector<VertexId>> adj(labels.size());
    for (VertexId a = 0; a < labels.size(); ++a) {
        for (VertexId b = a + 1; b < labels.size(); ++b) {
            if (hamming(labels[a], labels[b]) == 1) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        }
    }
    return adj;
}

// Graph distance equals Hamming distance for every pair.
bool isometric_labels(const std::vector<Label>& labels)
{
    const Matrix d = bfs_all(hamming_adjacency(labels));
    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            if (d[a][b] != hamming(labels[a], labels[b])) return false;
        }
    }
    return true;
}

void order(Corpus& c)
{
    std::vector<std::pair<CanonicalForm, CubeGraph>> keyed;
    for (CubeGraph& g : c.graphs) {
        CanonicalForm f = canonical_form(g);
        keyed.emplace_back(std::move(f), std::move(g));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.labels.size() != b.first.labels.size()) return a.first.labels.size() < b.first.labels.size();
        return a.first < b.first;
    });
    c.graphs.clear();
    for (auto& [f, g] : keyed) c.graphs.push_back(std::move(g));
}

std::string hex(std::uint64_t v)
{
    std::ostringstream out;
    out << std::hex << v;
    return out.str();
}

// Compresses away the coordinates in `drop`.
Label squeeze(Label l, Label drop, int m)
{
    Label out;
    int k = 0;
    for (int c = 0; c < m; ++c) {
        if (drop.has(c)) continue;
        if (l.has(c)) out = out.with(k, true);
        ++k;
    }
    return out;
}

class Matcher {
public:
    Matcher(const AbstractGraph& a, const AbstractGraph& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget)
    {
        map_.assign(a.n, kNone);
        used_.assign(b.n, 0);
    }

    bool run() { return extend(0); }

private:
    static constexpr VertexId kNone = ~VertexId{0};

    bool extend(VertexId v)
    {
        if (v == a_.n) return true;
        for (VertexId w = 0; w < b_.n; ++w) {
            if (used_[w] || a_.adj[v].size() != b_.adj[w].size()) continue;
            if (++steps_ > budget_) throw Error(Errc::BudgetExceeded, "isomorphism search exceeded its budget");
            bool ok = true;
            for (VertexId u = 0; u < v && ok; ++u) {
                const bool ea = std::binary_search(a_.adj[v].begin(), a_.adj[v].end(), u);
                const bool eb = std::binary_search(b_.adj[w].begin(), b_.adj[w].end(), map_[u]);
                ok = ea == eb;
            }
            if (!ok) continue;
            map_[v] = w;
            used_[w] = 1;
            if (extend(v + 1)) return true;
            used_[w] = 0;
            map_[v] = kNone;
        }
        return false;
    }

    const AbstractGraph& a_;
    const AbstractGraph& b_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
    std::vector<VertexId> map_;
    std::vector<char> used_;
};

std::vector<std::size_t> degree_profile(const AbstractGraph& g)
{
    std::vector<std::size_t> out;
    for (const auto& a : g.adj) out.push_back(a.size());
    std::sort(out.begin(), out.end());
    return out;
}

AbstractGraph abstract_of(const std::vector<Label>& labels)
{
    auto adj = hamming_adjacency(labels);
    AbstractGraph g;
    g.n = labels.size();
    for (auto& a : adj) std::sort(a.begin(), a.end());
    g.adj = std::move(adj);
    return g;
}

} // namespace

Corpus enumerate_partial_cubes(int m, std::size_t n_max, EnumerationOptions opts)
{
    if (m < 1 || m > 4) throw Error(Errc::BadParams, "exhaustive enumeration needs 1 <= m <= 4");
    const std::size_t points = std::size_t{1} << m;
    // Up to an XOR shift every subset contains the empty label.
    const std::uint64_t subsets = std::uint64_t{1} << (points - 1);
    if (subsets > opts.budget) {
        throw Error(Errc::BudgetExceeded, "enumeration of Q_" + std::to_string(m) + " needs " +
                                              std::to_string(subsets) + " subsets");
    }
    std::map<CanonicalForm, CubeGraph> found;
    for (std::uint64_t rest = 0; rest < subsets; ++rest) {
        const std::uint64_t mask = (rest << 1) | 1u;
        if (static_cast<std::size_t>(std::popcount(mask)) > n_max) continue;
        std::vector<Label> labels;
        for (std::size_t p = 0; p < points; ++p) {
            if ((mask >> p) & 1u) labels.emplace_back(p);
        }
        if (!isometric_labels(labels)) continue;
        const CubeGraph g = CubeGraph::from_labels(m, labels);
        CanonicalForm f = canonical_form(g);
        if (!found.contains(f)) found.emplace(f, CubeGraph::from_labels(f.m, f.labels));
    }
    Corpus c;
    c.m = m;
    c.n_max = n_max;
    c.source = "exhaustive";
    for (auto& [f, g] : found) c.graphs.push_back(g);
    order(c);
    return c;
}

Corpus sample_partial_cubes(int m, std::size_t count, std::uint64_t seed)
{
    if (m < 1 || m > 6) throw Error(Errc::BadParams, "sampling needs 1 <= m <= 6");
    std::mt19937_64 rng(seed);
    const std::uint64_t points = std::uint64_t{1} << m;
    Corpus c;
    c.m = m;
    c.n_max = points;
    c.source = "sampled:" + std::to_string(seed);
    std::uniform_int_distribution<std::uint64_t> pick_point(0, points - 1);
    std::uniform_int_distribution<std::size_t> pick_size(1, points);
    std::uniform_int_distribution<int> pick_coord(0, m - 1);
    while (c.graphs.size() < count) {
        const std::size_t target = pick_size(rng);
        std::vector<Label> labels{Label{pick_point(rng)}};
        // Grow through Q_m-neighbors, rejecting additions that break isometry.
        for (std::size_t attempt = 0; labels.size() < target && attempt < 8 * points; ++attempt) {
            std::uniform_int_distribution<std::size_t> pick_member(0, labels.size() - 1);
            const Label next = labels[pick_member(rng)].flipped(pick_coord(rng));
            if (std::find(labels.begin(), labels.end(), next) != labels.end()) continue;
            labels.push_back(next);
            if (!isometric_labels(labels)) labels.pop_back();
        }
        std::sort(labels.begin(), labels.end());
        c.graphs.push_back(CubeGraph::from_labels(m, labels));
    }
    return c;
}

std::uint64_t corpus_digest(const Corpus& c)
{
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        for (int k = 0; k < 8; ++k) {
            h ^= (v >> (8 * k)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(c.m));
    mix(c.n_max);
    mix(c.graphs.size());
    for (const CubeGraph& g : c.graphs) mix(digest(canonical_form(g)));
    return h;
}

void save_corpus(const Corpus& c, const std::filesystem::path& file)
{
    nlohmann::json j;
    j["format"] = "pcube-corpus/1";
    j["m"] = c.m;
    j["n_max"] = c.n_max;
    j["source"] = c.source;
    j["digest"] = hex(corpus_digest(c));
    nlohmann::json graphs = nlohmann::json::array();
    for (const CubeGraph& g : c.graphs) {
        nlohmann::json v = nlohmann::json::array();
        for (Label l : g.labels()) v.push_back(l.to_bitstring(g.dimension()));
        graphs.push_back({{"m", g.dimension()}, {"vertices", v}});
    }
    j["graphs"] = std::move(graphs);
    if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump() << '\n';
    }
    std::filesystem::rename(tmp, file);
}

std::optional<Corpus> load_corpus(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("format") != "pcube-corpus/1") return std::nullopt;
        Corpus c;
        c.m = j.at("m").get<int>();
        c.n_max = j.at("n_max").get<std::size_t>();
        c.source = j.at("source").get<std::string>();
        for (const auto& g : j.at("graphs")) {
            std::vector<Label> labels;
            for (const auto& v : g.at("vertices")) labels.push_back(Label::from_bitstring(v.get<std::string>()));
            c.graphs.push_back(CubeGraph::from_labels(g.at("m").get<int>(), labels));
        }
        if (j.at("digest").get<std::string>() != hex(corpus_digest(c))) return std::nullopt;
        return c;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Corpus cached_corpus(int m, std::size_t n_max, const std::filesystem::path& dir)
{
    const std::filesystem::path file = dir / ("corpus-m" + std::to_string(m) + "-n" + std::to_string(n_max) + ".json");
    if (auto c = load_corpus(file); c && c->m == m && c->n_max == n_max && c->source == "exhaustive") return *c;
    Corpus c = enumerate_partial_cubes(m, n_max);
    save_corpus(c, file);
    return c;
}

std::vector<std::vector<int>> bfs_distances(const CubeGraph& g) { return bfs_all(to_abstract(g).adj); }

bool naive_is_convex(const CubeGraph& g, const VertexSet& s)
{
    const Matrix d = bfs_distances(g);
    for (VertexId u : s) {
        for (VertexId v : s) {
            for (VertexId w = 0; w < g.size(); ++w) {
                const bool inside = std::find(s.begin(), s.end(), w) != s.end();
                if (!inside && d[u][w] + d[w][v] == d[u][v]) return false;
            }
        }
    }
    return true;
}

bool naive_is_gated(const CubeGraph& g, const VertexSet& s)
{
    if (s.empty()) return false;
    const Matrix d = bfs_distances(g);
    for (VertexId v = 0; v < g.size(); ++v) {
        bool has_gate = false;
        for (VertexId x : s) {
            bool gate = true;
            for (VertexId y : s) gate = gate && d[v][y] == d[v][x] + d[x][y];
            has_gate = has_gate || gate;
        }
        if (!has_gate) return false;
    }
    return true;
}

bool naive_shattered(const SetFamily& f, Label x)
{
    std::vector<int> coords;
    for (int c = 0; c < f.m; ++c) {
        if (x.has(c)) coords.push_back(c);
    }
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << coords.size()); ++pattern) {
        bool realized = false;
        for (Label member : f.members) {
            bool match = true;
            for (std::size_t k = 0; k < coords.size(); ++k) match = match && member.has(coords[k]) == bool((pattern >> k) & 1u);
            realized = realized || match;
        }
        if (!realized) return false;
    }
    return true;
}

bool naive_isomorphic(const AbstractGraph& a, const AbstractGraph& b, NaiveOptions opts)
{
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (degree_profile(a) != degree_profile(b)) return false;
    return Matcher(a, b, opts.budget).run();
}

bool naive_pc_minor(const CubeGraph& g, const CubeGraph& h, NaiveOptions opts)
{
    const int m = g.dimension();
    const AbstractGraph target = to_abstract(h);
    std::uint64_t regions = 1;
    for (int c = 0; c < m; ++c) regions *= 3;
    if (regions * (std::uint64_t{1} << m) > opts.budget) {
        throw Error(Errc::BudgetExceeded, "pc-minor search exceeded its budget");
    }
    std::vector<int> side(static_cast<std::size_t>(m));
    for (std::uint64_t r = 0; r < regions; ++r) {
        std::uint64_t code = r;
        for (int c = 0; c < m; ++c) {
            side[static_cast<std::size_t>(c)] = static_cast<int>(code % 3);  // 0 free, 1 minus, 2 plus
            code /= 3;
        }
        std::vector<Label> kept;
        for (Label l : g.labels()) {
            bool in = true;
            for (int c = 0; c < m; ++c) {
                const int s = side[static_cast<std::size_t>(c)];
                if (s != 0) in = in && l.has(c) == (s == 2);
            }
            if (in) kept.push_back(l);
        }
        if (kept.empty()) continue;
        for (std::uint64_t drop = 0; drop < (std::uint64_t{1} << m); ++drop) {
            std::vector<Label> image;
            for (Label l : kept) image.push_back(squeeze(l, Label{drop}, m));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() != h.size()) continue;
            if (naive_isomorphic(abstract_of(image), target, opts)) return true;
        }
    }
    return false;
}

} // namespace pcube::oracle
