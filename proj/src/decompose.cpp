#include "edsq/decompose.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace edsq {

namespace {

// Pairwise closure of {u, v}: absorb outside vertices adjacent to some
// but not all members until none distinguishes. Returns the member mask.
std::vector<char> module_closure(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    std::vector<char> in_m(n, 0);
    std::vector<int> cnt(n, 0); // neighbors inside the module, for outside vertices
    int size = 0;
    auto add = [&](int z) {
        in_m[z] = 1;
        ++size;
        for (int w : g.neighbors(z))
            if (!in_m[w])
                ++cnt[w];
    };
    add(u);
    add(v);
    bool grew = true;
    while (grew && size < n) {
        grew = false;
        for (int z = 0; z < n; ++z)
            if (!in_m[z] && cnt[z] > 0 && cnt[z] < size) {
                add(z);
                grew = true;
            }
    }
    return in_m;
}

} // namespace

bool is_module(const Graph& g, const VertexSet& m) {
    std::vector<char> in_m(g.vertex_count(), 0);
    for (int v : m) {
        g.check_vertex(v);
        in_m[v] = 1;
    }
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (in_m[z])
            continue;
        int hits = 0;
        for (int w : g.neighbors(z))
            hits += in_m[w];
        if (hits != 0 && hits != static_cast<int>(m.size()))
            return false;
    }
    return true;
}

std::optional<VertexSet> find_nontrivial_module(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("find_nontrivial_module: need at least 2 vertices");
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            std::vector<char> in_m = module_closure(g, u, v);
            VertexSet module;
            for (int z = 0; z < n; ++z)
                if (in_m[z])
                    module.push_back(z);
            if (static_cast<int>(module.size()) < n) {
                if (!is_module(g, module))
                    throw std::logic_error("find_nontrivial_module: closure is not a module");
                return module;
            }
        }
    return std::nullopt;
}

bool is_prime(const Graph& g) {
    if (g.vertex_count() < 2)
        return true;
    return !find_nontrivial_module(g).has_value();
}

LexMResult lex_m_order(const Graph& g) {
    const int n = g.vertex_count();
    LexMResult result;
    result.order.assign(n, -1);
    result.madj_up.assign(n, {});
    // Labels are sequences of previously assigned positions, kept in
    // decreasing order; lexicographic comparison picks the next vertex.
    std::vector<std::vector<int>> label(n);
    std::vector<char> numbered(n, 0);
    for (int step = n - 1; step >= 0; --step) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (numbered[u])
                continue;
            if (v < 0 || label[u] > label[v])
                v = u;
        }
        numbered[v] = 1;
        result.order[step] = v;
        // Rank unnumbered vertices by label; equal labels share a rank.
        std::vector<int> unnumbered;
        for (int u = 0; u < n; ++u)
            if (!numbered[u])
                unnumbered.push_back(u);
        std::sort(unnumbered.begin(), unnumbered.end(),
                  [&](int a, int b) { return label[a] < label[b]; });
        std::vector<int> rank(n, -1);
        int r = 0;
        for (size_t i = 0; i < unnumbered.size(); ++i) {
            if (i > 0 && label[unnumbered[i - 1]] < label[unnumbered[i]])
                ++r;
            rank[unnumbered[i]] = r;
        }
        // u joins S when reachable from v via vertices of strictly
        // smaller rank; processing S in ascending rank order suffices.
        std::vector<std::vector<int>> bucket(r + 1);
        std::vector<char> in_s(n, 0);
        for (int u : g.neighbors(v))
            if (!numbered[u] && !in_s[u]) {
                in_s[u] = 1;
                bucket[rank[u]].push_back(u);
            }
        for (int rr = 0; rr <= r; ++rr)
            for (size_t i = 0; i < bucket[rr].size(); ++i) {
                int u = bucket[rr][i];
                for (int w : g.neighbors(u))
                    if (!numbered[w] && !in_s[w] && rank[w] > rank[u]) {
                        in_s[w] = 1;
                        bucket[rank[w]].push_back(w);
                    }
            }
        for (int u = 0; u < n; ++u)
            if (in_s[u]) {
                label[u].push_back(step);
                result.madj_up[u].push_back(v);
            }
    }
    for (auto& up : result.madj_up)
        std::sort(up.begin(), up.end());
    return result;
}

std::optional<std::pair<VertexSet, VertexSet>> find_clique_separator(const Graph& g) {
    const int n = g.vertex_count();
    LexMResult lexm = lex_m_order(g);
    for (int p = 0; p < n; ++p) {
        int v = lexm.order[p];
        const VertexSet& sep = lexm.madj_up[v];
        if (sep.empty())
            continue;
        bool clique = true;
        for (size_t i = 0; i < sep.size() && clique; ++i)
            for (size_t j = i + 1; j < sep.size(); ++j)
                if (!g.has_edge(sep[i], sep[j])) {
                    clique = false;
                    break;
                }
        if (!clique)
            continue;
        // Component of v in g - sep.
        std::vector<char> blocked(n, 0);
        for (int c : sep)
            blocked[c] = 1;
        std::vector<char> seen(n, 0);
        std::deque<int> queue{v};
        seen[v] = 1;
        int reached = 0;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            ++reached;
            for (int y : g.neighbors(x))
                if (!blocked[y] && !seen[y]) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
        }
        if (reached + static_cast<int>(sep.size()) == n)
            continue; // does not separate
        VertexSet comp;
        for (int x = 0; x < n; ++x)
            if (seen[x])
                comp.push_back(x);
        return std::make_pair(sep, comp);
    }
    return std::nullopt;
}

std::vector<VertexSet> AtomTree::atoms() const {
    std::vector<VertexSet> out;
    for (int idx : atom_nodes)
        out.push_back(nodes[idx].vertices);
    return out;
}

std::vector<VertexSet> AtomTree::separators() const {
    std::vector<VertexSet> out;
    for (const Node& node : nodes)
        if (!node.separator.empty())
            out.push_back(node.separator);
    return out;
}

namespace {

int decompose_rec(const Graph& g, const VertexSet& verts, int parent, AtomTree& tree) {
    InducedSubgraph sub = induced(g, verts);
    auto split = find_clique_separator(sub.graph);
    int idx = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(AtomTree::Node{verts, {}, parent, {-1, -1}});
    if (!split) {
        tree.atom_nodes.push_back(idx);
        return idx;
    }
    VertexSet sep, comp;
    for (int c : split->first)
        sep.push_back(sub.vertices[c]);
    for (int a : split->second)
        comp.push_back(sub.vertices[a]);
    tree.nodes[idx].separator = sep;

    VertexSet left = comp; // component + separator
    left.insert(left.end(), sep.begin(), sep.end());
    std::sort(left.begin(), left.end());
    VertexSet right; // rest + separator
    std::vector<char> in_comp(g.vertex_count(), 0);
    for (int a : comp)
        in_comp[a] = 1;
    for (int x : verts)
        if (!in_comp[x])
            right.push_back(x);

    int li = decompose_rec(g, left, idx, tree);
    tree.nodes[idx].children[0] = li;
    int ri = decompose_rec(g, right, idx, tree);
    tree.nodes[idx].children[1] = ri;
    return idx;
}

} // namespace

AtomTree atoms(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("atoms: graph must be connected");
    AtomTree tree;
    if (g.vertex_count() == 0) {
        tree.nodes.push_back(AtomTree::Node{{}, {}, -1, {-1, -1}});
        tree.atom_nodes.push_back(0);
        return tree;
    }
    VertexSet all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    decompose_rec(g, all, -1, tree);
    const auto sep_count = tree.nodes.size() - tree.atom_nodes.size();
    if (sep_count + 1 != tree.atom_nodes.size() ||
        sep_count > static_cast<size_t>(std::max(0, g.vertex_count() - 1)))
        throw std::logic_error("atoms: separator count exceeds the n-1 bound");
    // Certify every separator: must be a clique and must disconnect its node.
    for (const auto& node : tree.nodes) {
        if (node.separator.empty())
            continue;
        for (size_t i = 0; i < node.separator.size(); ++i)
            for (size_t j = i + 1; j < node.separator.size(); ++j)
                if (!g.has_edge(node.separator[i], node.separator[j]))
                    throw std::logic_error("atoms: separator is not a clique");
        VertexSet rest;
        std::vector<char> drop(g.vertex_count(), 0);
        for (int c : node.separator)
            drop[c] = 1;
        for (int x : node.vertices)
            if (!drop[x])
                rest.push_back(x);
        if (induced(g, rest).graph.is_connected())
            throw std::logic_error("atoms: separator does not disconnect its node");
    }
    return tree;
}

NearlyChordalResult is_nearly_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> drop(n, 0);
    for (int v = 0; v < n; ++v) {
        std::fill(drop.begin(), drop.end(), 0);
        drop[v] = 1;
        for (int u : g.neighbors(v))
            drop[u] = 1;
        VertexSet rest;
        for (int x = 0; x < n; ++x)
            if (!drop[x])
                rest.push_back(x);
        InducedSubgraph sub = induced(g, rest);
        ChordalityResult ch = chordality(sub.graph);
        if (!ch) {
            NearlyChordalResult bad;
            bad.ok = false;
            bad.vertex = v;
            for (int x : ch.cycle)
                bad.cycle.push_back(sub.vertices[x]);
            return bad;
        }
    }
    return NearlyChordalResult{true, -1, {}};
}

} // namespace edsq
