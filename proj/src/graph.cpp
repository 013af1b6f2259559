#include "edsq/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace edsq {

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n_);
    if (n_ <= kDefaultBitsetThreshold) {
        const int words = (n_ + 63) / 64;
        bits_.assign(n_, std::vector<std::uint64_t>(words, 0));
    }
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : Graph(vertex_count) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (int v = 0; v < n_; ++v) {
        auto& row = adj_[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("Graph: duplicate edge at vertex " + std::to_string(v));
        m_ += static_cast<std::int64_t>(row.size());
        if (!bits_.empty())
            for (int u : row)
                bits_[v][static_cast<size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
    }
    m_ /= 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!bits_.empty())
        return (bits_[u][static_cast<size_t>(v) / 64] >> (v % 64)) & 1;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    VertexSet out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<VertexSet> Graph::connected_components() const {
    std::vector<VertexSet> comps;
    std::vector<char> seen(n_, 0);
    std::deque<int> queue;
    for (int s = 0; s < n_; ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        seen[s] = 1;
        queue.push_back(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    return connected_components().size() == 1;
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < k; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

Graph cycle_graph(int k) {
    if (k < 3)
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        edges.emplace_back(std::min(i, (i + 1) % k), std::max(i, (i + 1) % k));
    return Graph(k, edges);
}

Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
            edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph empty_graph(int k) { return Graph(k); }

Graph square(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<char> mark(n, 0);
    std::vector<int> touched;
    for (int v = 0; v < n; ++v) {
        touched.clear();
        for (int u : g.neighbors(v)) {
            if (!mark[u] && u != v) {
                mark[u] = 1;
                touched.push_back(u);
            }
            for (int w : g.neighbors(u))
                if (!mark[w] && w != v) {
                    mark[w] = 1;
                    touched.push_back(w);
                }
        }
        for (int u : touched) {
            if (v < u)
                edges.emplace_back(v, u);
            mark[u] = 0;
        }
    }
    return Graph(n, edges);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    g.check_vertex(source);
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        return 0;
    std::vector<int> dist = bfs_distances(g, u);
    if (dist[v] < 0)
        return std::nullopt;
    return dist[v];
}

bool is_valid_vertex_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= g.vertex_count())
            return false;
        if (i > 0 && s[i - 1] >= s[i])
            return false;
    }
    return true;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != s.size())
        throw std::invalid_argument("induced: vertex set has duplicates");
    std::vector<int> local(g.vertex_count(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
        g.check_vertex(sorted[i]);
        local[sorted[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < sorted.size(); ++i)
        for (int u : g.neighbors(sorted[i]))
            if (sorted[i] < u && local[u] >= 0)
                edges.emplace_back(static_cast<int>(i), local[u]);
    return InducedSubgraph{Graph(static_cast<int>(sorted.size()), edges), std::move(sorted)};
}

std::vector<int> lex_bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    // Ordered sequence of buckets; the front bucket holds the vertices with
    // the currently largest label.
    std::vector<std::vector<int>> buckets;
    if (n > 0) {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        buckets.push_back(std::move(all));
    }
    std::vector<char> visited(n, 0);
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> is_nbr(n, 0);
    while (!buckets.empty()) {
        int v = buckets.front().front();
        buckets.front().erase(buckets.front().begin());
        if (buckets.front().empty())
            buckets.erase(buckets.begin());
        visited[v] = 1;
        order.push_back(v);
        for (int u : g.neighbors(v))
            is_nbr[u] = 1;
        std::vector<std::vector<int>> next;
        next.reserve(buckets.size() * 2);
        for (auto& bucket : buckets) {
            std::vector<int> hit, miss;
            for (int u : bucket)
                (is_nbr[u] ? hit : miss).push_back(u);
            if (!hit.empty())
                next.push_back(std::move(hit));
            if (!miss.empty())
                next.push_back(std::move(miss));
        }
        buckets = std::move(next);
        for (int u : g.neighbors(v))
            is_nbr[u] = 0;
    }
    return order;
}

std::optional<std::array<int, 3>> find_peo_violation(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        pos[order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        // Later neighbors of v in elimination order; the earliest is the parent.
        int parent = -1, parent_pos = n;
        for (int u : g.neighbors(v))
            if (pos[u] > i && pos[u] < parent_pos) {
                parent = u;
                parent_pos = pos[u];
            }
        if (parent < 0)
            continue;
        for (int u : g.neighbors(v))
            if (pos[u] > i && u != parent && !g.has_edge(parent, u))
                return std::array<int, 3>{v, parent, u};
    }
    return std::nullopt;
}

namespace {

// Shortest path from a to d inside the allowed set (allowed[a] and
// allowed[d] must be true); empty when none exists.
std::vector<int> restricted_path(const Graph& g, int a, int d, const std::vector<char>& allowed) {
    std::vector<int> prev(g.vertex_count(), -2);
    std::deque<int> queue;
    prev[a] = -1;
    queue.push_back(a);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == d)
            break;
        for (int u : g.neighbors(v))
            if (allowed[u] && prev[u] == -2) {
                prev[u] = v;
                queue.push_back(u);
            }
    }
    if (prev[d] == -2)
        return {};
    std::vector<int> path;
    for (int v = d; v != -1; v = prev[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4)
        return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive)
                return false;
        }
    return true;
}

} // namespace

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len) {
    if (min_len != 4 && min_len != 5)
        throw std::invalid_argument("find_chordless_cycle: min_len must be 4 or 5");
    const int n = g.vertex_count();
    std::vector<char> allowed(n, 0);
    if (min_len == 4) {
        // For each induced path a-b-c, look for an a..c path avoiding N[b].
        for (int b = 0; b < n; ++b) {
            const auto& nb = g.neighbors(b);
            for (int a : nb)
                for (int c : nb) {
                    if (a >= c || g.has_edge(a, c))
                        continue;
                    std::fill(allowed.begin(), allowed.end(), 1);
                    allowed[b] = 0;
                    for (int x : nb)
                        allowed[x] = 0;
                    allowed[a] = allowed[c] = 1;
                    auto path = restricted_path(g, a, c, allowed);
                    if (path.empty())
                        continue;
                    std::vector<int> cycle;
                    cycle.push_back(b);
                    cycle.insert(cycle.end(), path.begin(), path.end());
                    if (!is_chordless_cycle(g, cycle))
                        throw std::logic_error("find_chordless_cycle: extracted cycle has a chord");
                    return cycle;
                }
        }
        return std::nullopt;
    }
    // min_len == 5: for each induced P4 a-b-c-d, look for a d..a path that
    // avoids N[b] and N[c]; any such path closes a hole through the P4.
    for (int b = 0; b < n; ++b)
        for (int c : g.neighbors(b)) {
            for (int a : g.neighbors(b)) {
                if (a == c || g.has_edge(a, c))
                    continue;
                for (int d : g.neighbors(c)) {
                    if (d == a || d == b || g.has_edge(d, b) || g.has_edge(d, a))
                        continue;
                    std::fill(allowed.begin(), allowed.end(), 1);
                    for (int x : g.neighbors(b))
                        allowed[x] = 0;
                    for (int x : g.neighbors(c))
                        allowed[x] = 0;
                    allowed[b] = allowed[c] = 0;
                    allowed[a] = allowed[d] = 1;
                    auto path = restricted_path(g, a, d, allowed);
                    if (path.empty())
                        continue;
                    // path runs a..d; the hole is b, c, d, ..., a.
                    std::vector<int> cycle;
                    cycle.push_back(b);
                    cycle.push_back(c);
                    for (auto it = path.rbegin(); it != path.rend(); ++it)
                        cycle.push_back(*it);
                    if (!is_chordless_cycle(g, cycle) || cycle.size() < 5)
                        throw std::logic_error("find_chordless_cycle: extracted hole has a chord");
                    return cycle;
                }
            }
        }
    return std::nullopt;
}

ChordalityResult chordality(const Graph& g) {
    ChordalityResult result;
    std::vector<int> visit = lex_bfs_order(g);
    // The reverse of a LexBFS order is a PEO exactly when g is chordal.
    std::vector<int> elim(visit.rbegin(), visit.rend());
    if (!find_peo_violation(g, elim)) {
        result.chordal = true;
        result.peo = std::move(elim);
        return result;
    }
    auto cycle = find_chordless_cycle(g, 4);
    if (!cycle)
        throw std::logic_error("chordality: PEO check failed but no chordless cycle found");
    result.chordal = false;
    result.cycle = std::move(*cycle);
    return result;
}

} // namespace edsq
