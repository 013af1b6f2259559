#include "edsq/gen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "edsq/wed.hpp"

namespace edsq {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("SplitMix64::below: bound must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::int64_t SplitMix64::in_range(std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw std::invalid_argument("SplitMix64::in_range: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) // full 64-bit range
        return static_cast<std::int64_t>(next());
    return lo + static_cast<std::int64_t>(below(span));
}

std::uint64_t SplitMix64::child_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 stream(seed + index * 0x9E3779B97F4A7C15ULL);
    return stream.next();
}

namespace {

Graph graph_from_edges(int n, const std::set<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    return Graph(n, list);
}

std::set<std::pair<int, int>> draw_edges(int n, double p, SplitMix64& rng) {
    std::set<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double x = rng.unit();
            if (x < p)
                edges.insert({u, v});
        }
    return edges;
}

// Edges of the witness whose deletion destroys it: for a pattern
// embedding the image edges, for a hole the cycle edges.
std::vector<std::pair<int, int>> witness_edges(const ClassCheckResult& check) {
    std::vector<std::pair<int, int>> out;
    if (check.pattern_witness) {
        const Embedding& phi = *check.pattern_witness;
        const Graph& pat = pattern_graph(phi.pattern);
        for (auto [a, b] : pat.edges())
            out.emplace_back(std::min(phi.map[a], phi.map[b]), std::max(phi.map[a], phi.map[b]));
    } else {
        const auto& cycle = check.hole_witness;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            out.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    return out;
}

} // namespace

Graph random_graph(const GenConfig& cfg) {
    if (cfg.n < 0)
        throw std::invalid_argument("random_graph: negative n");
    SplitMix64 rng(cfg.seed);
    return graph_from_edges(cfg.n, draw_edges(cfg.n, cfg.edge_probability, rng));
}

std::optional<std::pair<Graph, WeightVec>> random_in_class(const GenConfig& cfg) {
    if (!cfg.graph_class)
        throw std::invalid_argument("random_in_class: no graph class configured");
    if (cfg.max_attempts < 1)
        throw std::invalid_argument("random_in_class: max_attempts must be >= 1");
    if (cfg.require_ed && cfg.n > kBruteForceEdCap)
        throw std::invalid_argument("random_in_class: require_ed needs n <= " +
                                    std::to_string(kBruteForceEdCap));
    for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
        SplitMix64 rng(SplitMix64::child_seed(cfg.seed, static_cast<std::uint64_t>(attempt)));
        std::set<std::pair<int, int>> edges = draw_edges(cfg.n, cfg.edge_probability, rng);
        Graph g = graph_from_edges(cfg.n, edges);
        // Local repair: each deletion removes one witness edge, so the
        // edge count strictly decreases and the loop terminates.
        std::size_t repairs_left = edges.size() + 1;
        ClassCheckResult check = is_in_class(g, *cfg.graph_class);
        while (!check) {
            if (repairs_left-- == 0)
                throw std::logic_error("random_in_class: repair loop exceeded edge budget");
            auto candidates = witness_edges(check);
            auto victim = candidates[rng.below(candidates.size())];
            edges.erase(victim);
            g = graph_from_edges(cfg.n, edges);
            check = is_in_class(g, *cfg.graph_class);
        }
        if (cfg.require_ed && brute_force_eds(g).empty())
            continue;
        WeightVec weights(cfg.n);
        for (int v = 0; v < cfg.n; ++v)
            weights[v] = rng.in_range(cfg.weight_range.first, cfg.weight_range.second);
        return std::make_pair(std::move(g), std::move(weights));
    }
    return std::nullopt;
}

std::uint64_t exhaustive_graph_count(int n) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("exhaustive_graphs: n must be in [0, 7]");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

void exhaustive_graphs(int n, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t total = exhaustive_graph_count(n);
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1)
                edges.push_back(slots[k]);
        fn(Graph(n, edges));
    }
}

} // namespace edsq
