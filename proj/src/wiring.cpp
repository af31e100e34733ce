#include "pcube/wiring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "pcube/cells.hpp"

namespace pcube {

namespace {

int parse_int(std::string_view tok)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(Errc::ParseError, "bad number '" + std::string(tok) + "' in wiring diagram");
    }
    return value;
}

WiringCrossing parse_crossing(std::string_view tok)
{
    const auto dash = tok.find('-');
    if (dash == std::string_view::npos) {
        const int p = parse_int(tok);
        return {p, p + 1};
    }
    return {parse_int(tok.substr(0, dash)), parse_int(tok.substr(dash + 1))};
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Applies each column to the running order of lines; `on_slab` sees the order
// before the first column and after every column.
template <class F>
void sweep(const WiringDiagram& w, F&& on_slab)
{
    std::vector<int> order(static_cast<std::size_t>(w.lines));
    std::iota(order.begin(), order.end(), 0);
    on_slab(order);
    for (const auto& column : w.columns) {
        for (const WiringCrossing& x : column) {
            std::reverse(order.begin() + (x.lo - 1), order.begin() + x.hi);
        }
        on_slab(order);
    }
}

std::vector<Label> slab_regions(const std::vector<int>& order)
{
    std::vector<Label> out;
    Label below;
    out.push_back(below);
    for (int line : order) {
        below = below.with(line, true);
        out.push_back(below);
    }
    return out;
}

} // namespace

WiringDiagram parse_wiring(std::string_view text)
{
    WiringDiagram w;
    bool have_header = false;
    std::vector<WiringCrossing> current;
    auto flush = [&]() {
        if (!current.empty()) w.columns.push_back(std::move(current));
        current.clear();
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!have_header) {
            constexpr std::string_view key = "lines:";
            if (!line.starts_with(key)) throw Error(Errc::ParseError, "wiring diagram must start with 'lines: L'");
            w.lines = parse_int(trim(line.substr(key.size())));
            if (w.lines < 0 || w.lines > kMaxDimension) throw Error(Errc::ParseError, "line count outside [0, 64]");
            have_header = true;
            continue;
        }
        std::string spaced;
        for (char ch : line) {
            if (ch == '|') {
                spaced += " | ";
            } else {
                spaced += ch;
            }
        }
        std::istringstream tokens(spaced);
        std::string tok;
        while (tokens >> tok) {
            if (tok == "|") {
                flush();
            } else {
                current.push_back(parse_crossing(tok));
            }
        }
        flush();
    }
    if (!have_header) throw Error(Errc::ParseError, "wiring diagram must start with 'lines: L'");
    return w;
}

std::string to_text(const WiringDiagram& w)
{
    std::string out = "lines: " + std::to_string(w.lines) + "\n";
    for (const auto& column : w.columns) {
        for (std::size_t i = 0; i < column.size(); ++i) {
            if (i > 0) out += ' ';
            const WiringCrossing& x = column[i];
            out += x.hi == x.lo + 1 ? std::to_string(x.lo) : std::to_string(x.lo) + "-" + std::to_string(x.hi);
        }
        out += '\n';
    }
    return out;
}

void validate(const WiringDiagram& w)
{
    if (w.lines < 0 || w.lines > kMaxDimension) throw Error(Errc::InvalidDiagram, "line count outside [0, 64]");
    const auto n = static_cast<std::size_t>(w.lines);
    std::vector<int> crossings(n * n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t col = 0; col < w.columns.size(); ++col) {
        std::vector<WiringCrossing> column = w.columns[col];
        std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
        int last = 0;
        for (const WiringCrossing& x : column) {
            if (x.lo < 1 || x.hi > w.lines || x.hi <= x.lo) {
                throw Error(Errc::InvalidDiagram, "crossing out of range in column " + std::to_string(col + 1));
            }
            if (x.lo <= last) throw Error(Errc::InvalidDiagram, "overlapping crossings in column " + std::to_string(col + 1));
            last = x.hi;
            for (int a = x.lo - 1; a < x.hi; ++a) {
                for (int b = a + 1; b < x.hi; ++b) {
                    const auto p = static_cast<std::size_t>(std::min(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]));
                    const auto q = static_cast<std::size_t>(std::max(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]));
                    if (++crossings[p * n + q] > 1) {
                        throw Error(Errc::InvalidDiagram, "lines " + std::to_string(p + 1) + " and " +
                                                              std::to_string(q + 1) + " cross twice");
                    }
                }
            }
            std::reverse(order.begin() + (x.lo - 1), order.begin() + x.hi);
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (crossings[p * n + q] != 1) {
                throw Error(Errc::InvalidDiagram,
                            "lines " + std::to_string(p + 1) + " and " + std::to_string(q + 1) + " never cross");
            }
        }
    }
}

WiringRegions wiring_regions(const WiringDiagram& w)
{
    validate(w);
    std::vector<Label> labels;
    std::vector<Label> outer;
    std::size_t slab = 0;
    sweep(w, [&](const std::vector<int>& order) {
        const auto regions = slab_regions(order);
        labels.insert(labels.end(), regions.begin(), regions.end());
        if (slab == 0 || slab == w.columns.size()) outer.insert(outer.end(), regions.begin(), regions.end());
        ++slab;
    });
    WiringRegions out;
    out.graph = CubeGraph::from_labels(w.lines, labels);
    out.unbounded = out.graph.vertex_set(outer);
    return out;
}

CubeGraph disk_from_wiring(const WiringDiagram& w)
{
    WiringRegions r = wiring_regions(w);
    if (!is_disk(r.graph)) throw Error(Errc::InvariantViolation, "region graph is not a disk");
    return std::move(r.graph);
}

WiringDiagram random_wiring(int lines, std::mt19937_64& rng, double concurrency)
{
    if (lines < 0 || lines > kMaxDimension) throw Error(Errc::BadParams, "line count outside [0, 64]");
    WiringDiagram w;
    w.lines = lines;
    const auto n = static_cast<std::size_t>(lines);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::bernoulli_distribution grow(concurrency);
    std::bernoulli_distribution share(0.3);
    // A block can be reversed iff its lines are still in increasing order,
    // i.e. no two of them have crossed yet.
    auto free_positions = [&]() {
        std::vector<int> out;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            if (order[p] < order[p + 1]) out.push_back(static_cast<int>(p));
        }
        return out;
    };
    while (true) {
        auto candidates = free_positions();
        if (candidates.empty()) break;
        std::vector<WiringCrossing> column;
        std::vector<char> used(n, 0);
        do {
            std::erase_if(candidates, [&](int p) { return used[static_cast<std::size_t>(p)] || used[static_cast<std::size_t>(p) + 1]; });
            if (candidates.empty()) break;
            const int p = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
            int hi = p + 1;
            while (static_cast<std::size_t>(hi) + 1 < n && !used[static_cast<std::size_t>(hi) + 1] &&
                   order[static_cast<std::size_t>(hi)] < order[static_cast<std::size_t>(hi) + 1] && grow(rng)) {
                ++hi;
            }
            for (int k = p; k <= hi; ++k) used[static_cast<std::size_t>(k)] = 1;
            column.push_back({p + 1, hi + 1});
        } while (share(rng));
        std::sort(column.begin(), column.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
        for (const WiringCrossing& x : column) std::reverse(order.begin() + (x.lo - 1), order.begin() + x.hi);
        w.columns.push_back(std::move(column));
    }
    return w;
}

} // namespace pcube
