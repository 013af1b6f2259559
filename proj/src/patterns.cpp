#include "edsq/patterns.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace edsq {

namespace {

Graph make_pattern(PatternId id) {
    using E = std::vector<std::pair<int, int>>;
    switch (id) {
    case PatternId::P2:
        return path_graph(2);
    case PatternId::P3:
        return path_graph(3);
    case PatternId::P4:
        return path_graph(4);
    case PatternId::P5:
        return path_graph(5);
    case PatternId::P6:
        return path_graph(6);
    case PatternId::P7:
        return path_graph(7);
    case PatternId::C4:
        return cycle_graph(4);
    case PatternId::C5:
        return cycle_graph(5);
    case PatternId::Claw:
        return Graph(4, E{{0, 1}, {0, 2}, {0, 3}});
    case PatternId::Chair:
        return Graph(5, E{{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    case PatternId::S113:
        // Center 0, two leaves, one branch of length 3.
        return Graph(6, E{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}});
    case PatternId::S122:
        return Graph(6, E{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}});
    case PatternId::Bull:
        // Triangle 0-1-2 with pendants 3-0 and 4-1.
        return Graph(5, E{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    case PatternId::Banner:
        // 4-cycle 0-1-2-3 with pendant 4 attached to 0.
        return Graph(5, E{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
    case PatternId::K23:
        return Graph(5, E{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case PatternId::TwoP3:
        return Graph(6, E{{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    case PatternId::TwoK2:
        return Graph(4, E{{0, 1}, {2, 3}});
    }
    throw std::invalid_argument("unknown pattern id");
}

const std::vector<std::pair<PatternId, const char*>>& name_table() {
    static const std::vector<std::pair<PatternId, const char*>> table = {
        {PatternId::P2, "P2"},         {PatternId::P3, "P3"},
        {PatternId::P4, "P4"},         {PatternId::P5, "P5"},
        {PatternId::P6, "P6"},         {PatternId::P7, "P7"},
        {PatternId::C4, "C4"},         {PatternId::C5, "C5"},
        {PatternId::Claw, "claw"},     {PatternId::Chair, "chair"},
        {PatternId::S113, "S113"},     {PatternId::S122, "S122"},
        {PatternId::Bull, "bull"},     {PatternId::Banner, "banner"},
        {PatternId::K23, "K23"},       {PatternId::TwoP3, "2P3"},
        {PatternId::TwoK2, "2K2"},
    };
    return table;
}

} // namespace

const Graph& pattern_graph(PatternId id) {
    static const std::map<PatternId, Graph> catalog = [] {
        std::map<PatternId, Graph> c;
        for (auto [pid, _] : name_table())
            c.emplace(pid, make_pattern(pid));
        return c;
    }();
    return catalog.at(id);
}

std::string pattern_name(PatternId id) {
    for (auto [pid, name] : name_table())
        if (pid == id)
            return name;
    throw std::invalid_argument("unknown pattern id");
}

std::optional<PatternId> pattern_from_name(const std::string& name) {
    for (auto [pid, pname] : name_table())
        if (name == pname)
            return pid;
    return std::nullopt;
}

std::vector<PatternId> all_patterns() {
    std::vector<PatternId> out;
    for (auto [pid, _] : name_table())
        out.push_back(pid);
    return out;
}

bool check_embedding(const Graph& g, const Embedding& phi) {
    const Graph& p = pattern_graph(phi.pattern);
    if (static_cast<int>(phi.map.size()) != p.vertex_count())
        return false;
    for (int i = 0; i < p.vertex_count(); ++i) {
        if (phi.map[i] < 0 || phi.map[i] >= g.vertex_count())
            return false;
        for (int j = i + 1; j < p.vertex_count(); ++j) {
            if (phi.map[i] == phi.map[j])
                return false;
            if (g.has_edge(phi.map[i], phi.map[j]) != p.has_edge(i, j))
                return false;
        }
    }
    return true;
}

namespace {

// Search order over pattern vertices: highest-degree anchor first, then
// greedily the vertex with the most already-placed neighbors (tie: higher
// degree, then lower index). Disconnected patterns start a fresh anchor
// when no remaining vertex touches the placed ones.
std::vector<int> pattern_order(const Graph& p) {
    const int k = p.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(k, 0);
    while (static_cast<int>(order.size()) < k) {
        int best = -1, best_touch = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v])
                continue;
            int touch = 0;
            for (int u : p.neighbors(v))
                touch += placed[u];
            if (order.empty())
                touch = 0;
            if (touch > best_touch || (touch == best_touch && p.degree(v) > best_deg)) {
                best = v;
                best_touch = touch;
                best_deg = p.degree(v);
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    return order;
}

struct InducedSearch {
    const Graph& host;
    const Graph& pat;
    std::vector<int> order;      // pattern vertices in placement order
    std::vector<int> assignment; // pattern vertex -> host vertex or -1
    std::vector<char> used;      // host vertex used

    bool consistent(int pv, int hv) const {
        if (host.degree(hv) < pat.degree(pv))
            return false;
        for (int q = 0; q < pat.vertex_count(); ++q) {
            if (assignment[q] < 0)
                continue;
            if (host.has_edge(hv, assignment[q]) != pat.has_edge(pv, q))
                return false;
        }
        return true;
    }

    bool place(size_t depth) {
        if (depth == order.size())
            return true;
        int pv = order[depth];
        // Prefer iterating over host neighbors of an already-placed
        // pattern neighbor.
        int anchor = -1;
        for (int q : pat.neighbors(pv))
            if (assignment[q] >= 0) {
                anchor = assignment[q];
                break;
            }
        auto try_host = [&](int hv) {
            if (used[hv] || !consistent(pv, hv))
                return false;
            assignment[pv] = hv;
            used[hv] = 1;
            if (place(depth + 1))
                return true;
            assignment[pv] = -1;
            used[hv] = 0;
            return false;
        };
        if (anchor >= 0) {
            for (int hv : host.neighbors(anchor))
                if (try_host(hv))
                    return true;
        } else {
            for (int hv = 0; hv < host.vertex_count(); ++hv)
                if (try_host(hv))
                    return true;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_induced(const Graph& g, PatternId p) {
    const Graph& pat = pattern_graph(p);
    if (g.vertex_count() < pat.vertex_count())
        return std::nullopt;
    InducedSearch search{g, pat, pattern_order(pat),
                         std::vector<int>(pat.vertex_count(), -1),
                         std::vector<char>(g.vertex_count(), 0)};
    if (!search.place(0))
        return std::nullopt;
    Embedding phi{p, search.assignment};
    if (!check_embedding(g, phi))
        throw std::logic_error("find_induced: produced an invalid embedding");
    return phi;
}

namespace {

// Exact chordless-cycle scan over vertex subsets, ascending bitmask order.
// A subset is a chordless cycle iff it induces a connected 2-regular graph.
std::optional<std::vector<int>> enumerate_hole(const Graph& g, int min_len) {
    const int n = g.vertex_count();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        if (__builtin_popcount(mask) < min_len)
            continue;
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                members.push_back(v);
        bool two_regular = true;
        for (int v : members) {
            int deg = 0;
            for (int u : members)
                deg += (u != v && g.has_edge(u, v));
            if (deg != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular)
            continue;
        // Walk the cycle; if it closes after visiting every member it is a
        // single chordless cycle.
        std::vector<int> cycle;
        std::vector<char> seen(n, 0);
        int start = members[0], prev = -1, cur = start;
        while (!seen[cur]) {
            seen[cur] = 1;
            cycle.push_back(cur);
            int next = -1;
            for (int u : members)
                if (u != prev && u != cur && g.has_edge(cur, u) && !seen[u]) {
                    next = u;
                    break;
                }
            if (next < 0)
                break;
            prev = cur;
            cur = next;
        }
        if (cycle.size() == members.size() && g.has_edge(cycle.back(), start))
            return cycle;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> find_hole(const Graph& g, int min_len) {
    if (min_len < 5)
        throw std::invalid_argument("find_hole: min_len must be >= 5");
    if (min_len == 5)
        return find_chordless_cycle(g, 5);
    if (g.vertex_count() > 16)
        throw std::invalid_argument(
            "find_hole: min_len > 5 is unsupported for graphs with more than 16 vertices");
    return enumerate_hole(g, min_len);
}

ClassSpec p6_s113_free() { return ClassSpec{"(P6,S113)-free", {PatternId::P6, PatternId::S113}, false}; }

ClassSpec p6_bull_free() { return ClassSpec{"(P6,bull)-free", {PatternId::P6, PatternId::Bull}, false}; }

ClassSpec hole_banner_free() { return ClassSpec{"(hole,banner)-free", {PatternId::Banner}, true}; }

ClassSpec banner_free() { return ClassSpec{"banner-free", {PatternId::Banner}, false}; }

std::optional<ClassSpec> class_from_name(const std::string& name) {
    if (name == "p6-s113-free")
        return p6_s113_free();
    if (name == "p6-bull-free")
        return p6_bull_free();
    if (name == "hole-banner-free")
        return hole_banner_free();
    if (name == "banner-free")
        return banner_free();
    return std::nullopt;
}

std::string ClassCheckResult::describe() const {
    if (member)
        return "member";
    std::string out = "non-member: ";
    if (pattern_witness) {
        out += "induced " + pattern_name(pattern_witness->pattern) + " {";
        for (size_t i = 0; i < pattern_witness->map.size(); ++i)
            out += (i ? "," : "") + std::to_string(pattern_witness->map[i]);
        out += "}";
    } else {
        out += "hole {";
        for (size_t i = 0; i < hole_witness.size(); ++i)
            out += (i ? "," : "") + std::to_string(hole_witness[i]);
        out += "}";
    }
    return out;
}

ClassCheckResult is_in_class(const Graph& g, const ClassSpec& spec) {
    ClassCheckResult result;
    if (spec.forbidden.empty() && !spec.hole_free)
        throw std::invalid_argument("is_in_class: empty class description");
    for (PatternId p : spec.forbidden)
        if (auto phi = find_induced(g, p)) {
            result.member = false;
            result.pattern_witness = std::move(phi);
            return result;
        }
    if (spec.hole_free)
        if (auto hole = find_hole(g, 5)) {
            result.member = false;
            result.hole_witness = std::move(*hole);
            return result;
        }
    result.member = true;
    return result;
}

} // namespace edsq
