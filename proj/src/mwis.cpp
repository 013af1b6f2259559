#include "edsq/mwis.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>

#include "edsq/decompose.hpp"
#include "edsq/patterns.hpp"

namespace edsq {

namespace {

constexpr Weight kWeightCap = Weight{1} << 31;

std::atomic<std::uint64_t> g_exact_calls{0};

} // namespace

WeightedGraph::WeightedGraph(Graph g, WeightVec w) : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<int>(weights.size()) != graph.vertex_count())
        throw std::invalid_argument("WeightedGraph: weight vector length mismatch");
    for (Weight x : weights)
        if (x < -kWeightCap || x > kWeightCap)
            throw std::invalid_argument("WeightedGraph: |weight| exceeds 2^31");
}

std::uint64_t mwis_exact_call_count() { return g_exact_calls.load(); }

// ---------------------------------------------------------------------------
// Exact branch and bound (value only).

namespace {

struct BnB {
    const Graph& g;
    const WeightVec& w;
    int n;
    int words;
    std::vector<std::uint64_t> adj; // n rows of `words` words
    Weight best = 0;

    BnB(const Graph& g, const WeightVec& w)
        : g(g), w(w), n(g.vertex_count()), words((n + 63) / 64), adj(static_cast<size_t>(n) * words, 0) {
        for (int v = 0; v < n; ++v)
            for (int u : g.neighbors(v))
                adj[static_cast<size_t>(v) * words + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    void run(std::vector<std::uint64_t> alive, Weight current) {
        // Take isolated positive vertices, then compute the optimistic bound.
        Weight bound = current;
        int pick = -1, pick_deg = -1;
        for (int word = 0; word < words; ++word) {
            std::uint64_t bitsw = alive[word];
            while (bitsw) {
                int v = word * 64 + __builtin_ctzll(bitsw);
                bitsw &= bitsw - 1;
                int deg = 0;
                for (int k = 0; k < words; ++k)
                    deg += __builtin_popcountll(adj[static_cast<size_t>(v) * words + k] & alive[k]);
                if (deg == 0) {
                    current += w[v];
                    bound += w[v];
                    alive[word] &= ~(std::uint64_t{1} << (v % 64));
                    continue;
                }
                bound += w[v];
                if (deg > pick_deg) {
                    pick_deg = deg;
                    pick = v;
                }
            }
        }
        best = std::max(best, current);
        if (pick < 0 || bound <= best)
            return;
        // Include pick.
        {
            std::vector<std::uint64_t> next = alive;
            for (int k = 0; k < words; ++k)
                next[k] &= ~adj[static_cast<size_t>(pick) * words + k];
            next[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
            run(std::move(next), current + w[pick]);
        }
        // Exclude pick.
        alive[pick / 64] &= ~(std::uint64_t{1} << (pick % 64));
        run(std::move(alive), current);
    }
};

} // namespace

Weight mwis_value_exact(const Graph& g, const WeightVec& w) {
    g_exact_calls.fetch_add(1, std::memory_order_relaxed);
    const int n = g.vertex_count();
    BnB solver(g, w);
    std::vector<std::uint64_t> alive((n + 63) / 64, 0);
    for (int v = 0; v < n; ++v)
        if (w[v] > 0)
            alive[v / 64] |= std::uint64_t{1} << (v % 64);
    solver.run(std::move(alive), 0);
    return solver.best;
}

// ---------------------------------------------------------------------------
// Chordal solver (Frank's weight shifting along a PEO).

Weight mwis_value_chordal(const Graph& g, const WeightVec& w) {
    ChordalityResult ch = chordality(g);
    if (!ch)
        throw NotChordalError("mwis_chordal: input is not chordal", ch.cycle);
    // Zero and negative weights never help; solve the positive part.
    VertexSet pos;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (w[v] > 0)
            pos.push_back(v);
    InducedSubgraph sub = induced(g, pos);
    ChordalityResult sch = chordality(sub.graph);
    if (!sch)
        throw std::logic_error("mwis_chordal: induced subgraph of chordal graph not chordal");
    const int k = sub.graph.vertex_count();
    std::vector<int> pos_of(k, -1);
    for (int i = 0; i < k; ++i)
        pos_of[sch.peo[i]] = i;
    WeightVec residual(k);
    for (int i = 0; i < k; ++i)
        residual[i] = w[sub.vertices[i]];
    Weight value = 0;
    for (int i = 0; i < k; ++i) {
        int v = sch.peo[i];
        if (residual[v] <= 0)
            continue;
        value += residual[v];
        for (int u : sub.graph.neighbors(v))
            if (pos_of[u] > pos_of[v])
                residual[u] -= residual[v];
    }
    return value;
}

// ---------------------------------------------------------------------------
// Nearly-chordal solver: best of w(v) + chordal MWIS outside N[v].

Weight mwis_value_nearly_chordal(const Graph& g, const WeightVec& w) {
    const int n = g.vertex_count();
    Weight best = 0;
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
        WeightVec wsub(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i)
            wsub[i] = w[sub.vertices[i]];
        Weight inner;
        try {
            inner = mwis_value_chordal(sub.graph, wsub);
        } catch (const NotChordalError& e) {
            std::vector<int> cycle;
            for (int x : e.cycle)
                cycle.push_back(sub.vertices[x]);
            throw NotChordalError("mwis_nearly_chordal: graph outside N[" + std::to_string(v) +
                                      "] is not chordal",
                                  cycle);
        }
        best = std::max(best, w[v] + inner);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Decomposition pipeline for (hole,banner)-free graphs.

namespace {

struct PipelineFrame {
    const Graph& g;
    const WeightVec& w;
    // labels[v] is the vertex of the original input this local vertex
    // stands for (for violation reporting).
    const std::vector<int>& labels;
};

Weight pipeline_value(const Graph& g, const WeightVec& w, const std::vector<int>& labels);

Weight component_value(const Graph& g, const WeightVec& w, const std::vector<int>& labels) {
    const int n = g.vertex_count();
    if (n == 0)
        return 0;
    // Fast paths: chordal, then nearly chordal. Both are unconditionally
    // exact when their check passes, separators or not.
    try {
        return mwis_value_chordal(g, w);
    } catch (const NotChordalError&) {
    }
    NearlyChordalResult nc_witness;
    try {
        return mwis_value_nearly_chordal(g, w);
    } catch (const NotChordalError& e) {
        nc_witness.ok = false;
        nc_witness.cycle = e.cycle;
    }
    // Split on a clique separator: with C the separator, A the component
    // side and B the rest, re-weight each c in C by
    // w(c) + MWIS(B - N(c)) - MWIS(B) and add MWIS(B) to the A-side
    // optimum. Negative re-weights are fine; the empty set keeps every
    // sub-solve at value >= 0.
    if (auto split = find_clique_separator(g)) {
        const VertexSet& sep = split->first;
        const VertexSet& comp = split->second;
        std::vector<char> in_comp(n, 0), in_sep(n, 0);
        for (int a : comp)
            in_comp[a] = 1;
        for (int c : sep)
            in_sep[c] = 1;
        VertexSet bside;
        for (int x = 0; x < n; ++x)
            if (!in_comp[x] && !in_sep[x])
                bside.push_back(x);

        auto solve_subset = [&](const VertexSet& subset) {
            InducedSubgraph sub = induced(g, subset);
            WeightVec wsub(sub.graph.vertex_count());
            std::vector<int> lsub(sub.graph.vertex_count());
            for (int i = 0; i < sub.graph.vertex_count(); ++i) {
                wsub[i] = w[sub.vertices[i]];
                lsub[i] = labels[sub.vertices[i]];
            }
            return pipeline_value(sub.graph, wsub, lsub);
        };

        Weight base = solve_subset(bside);
        WeightVec adjusted = w;
        std::vector<char> drop(n, 0);
        for (int c : sep) {
            VertexSet restricted;
            std::fill(drop.begin(), drop.end(), 0);
            for (int u : g.neighbors(c))
                drop[u] = 1;
            for (int x : bside)
                if (!drop[x])
                    restricted.push_back(x);
            adjusted[c] = w[c] + solve_subset(restricted) - base;
        }
        VertexSet aside = comp;
        aside.insert(aside.end(), sep.begin(), sep.end());
        std::sort(aside.begin(), aside.end());
        InducedSubgraph sub = induced(g, aside);
        WeightVec wsub(sub.graph.vertex_count());
        std::vector<int> lsub(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i) {
            wsub[i] = adjusted[sub.vertices[i]];
            lsub[i] = labels[sub.vertices[i]];
        }
        return base + pipeline_value(sub.graph, wsub, lsub);
    }
    // Atom. Contract a nontrivial module if one exists, otherwise the
    // nearly-chordal failure certifies a structure violation.
    if (n >= 2) {
        if (auto module = find_nontrivial_module(g)) {
            InducedSubgraph msub = induced(g, *module);
            WeightVec wm(msub.graph.vertex_count());
            std::vector<int> lm(msub.graph.vertex_count());
            for (int i = 0; i < msub.graph.vertex_count(); ++i) {
                wm[i] = w[msub.vertices[i]];
                lm[i] = labels[msub.vertices[i]];
            }
            Weight inner = pipeline_value(msub.graph, wm, lm);
            // Keep the smallest member as representative; dropping the
            // rest leaves an induced subgraph because every member has
            // the same outside neighborhood.
            int rep = (*module)[0];
            VertexSet keep;
            std::vector<char> in_mod(n, 0);
            for (int x : *module)
                in_mod[x] = 1;
            for (int x = 0; x < n; ++x)
                if (!in_mod[x] || x == rep)
                    keep.push_back(x);
            InducedSubgraph sub = induced(g, keep);
            WeightVec wsub(sub.graph.vertex_count());
            std::vector<int> lsub(sub.graph.vertex_count());
            for (int i = 0; i < sub.graph.vertex_count(); ++i) {
                wsub[i] = sub.vertices[i] == rep ? inner : w[sub.vertices[i]];
                lsub[i] = labels[sub.vertices[i]];
            }
            return component_value(sub.graph, wsub, lsub);
        }
    }
    int bad_vertex = labels.empty() ? -1 : labels[0];
    std::vector<int> cycle;
    for (int x : nc_witness.cycle)
        cycle.push_back(labels[x]);
    // Recover the vertex whose deleted neighborhood is non-chordal for
    // the report.
    NearlyChordalResult probe = is_nearly_chordal(g);
    if (!probe.ok) {
        bad_vertex = labels[probe.vertex];
        cycle.clear();
        for (int x : probe.cycle)
            cycle.push_back(labels[x]);
    }
    throw StructureViolation(
        "mwis pipeline: prime atom is not nearly chordal; input is not (hole,banner)-free",
        bad_vertex, cycle);
}

Weight pipeline_value(const Graph& g, const WeightVec& w, const std::vector<int>& labels) {
    Weight total = 0;
    for (const VertexSet& comp : g.connected_components()) {
        if (static_cast<int>(comp.size()) == g.vertex_count()) {
            total += component_value(g, w, labels);
            break;
        }
        InducedSubgraph sub = induced(g, comp);
        WeightVec wsub(sub.graph.vertex_count());
        std::vector<int> lsub(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i) {
            wsub[i] = w[sub.vertices[i]];
            lsub[i] = labels[sub.vertices[i]];
        }
        total += component_value(sub.graph, wsub, lsub);
    }
    return total;
}

} // namespace

Weight mwis_value_decomposed(const Graph& g, const WeightVec& w) {
    std::vector<int> labels(g.vertex_count());
    std::iota(labels.begin(), labels.end(), 0);
    return pipeline_value(g, w, labels);
}

// ---------------------------------------------------------------------------
// Canonical reconstruction shared by every public solver.

Solution canonical_mwis(const Graph& g, const WeightVec& w, const ValueEngine& engine) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("canonical_mwis: weight vector length mismatch");
    const Weight total = engine(g, w);
    std::vector<char> avail(n, 1);
    Solution sol;
    Weight cur = total;
    for (int v = 0; v < n && cur > 0; ++v) {
        if (!avail[v])
            continue;
        std::vector<char> next = avail;
        next[v] = 0;
        for (int u : g.neighbors(v))
            next[u] = 0;
        VertexSet rest;
        for (int x = 0; x < n; ++x)
            if (next[x])
                rest.push_back(x);
        InducedSubgraph sub = induced(g, rest);
        WeightVec wsub(sub.graph.vertex_count());
        for (int i = 0; i < sub.graph.vertex_count(); ++i)
            wsub[i] = w[sub.vertices[i]];
        Weight t = engine(sub.graph, wsub);
        if (w[v] + t == cur) {
            sol.vertices.push_back(v);
            avail = std::move(next);
            cur = t;
        } else {
            avail[v] = 0;
        }
    }
    if (cur != 0)
        throw std::logic_error("canonical_mwis: value engine is inconsistent");
    for (int x : sol.vertices)
        sol.total_weight += w[x];
    if (sol.total_weight != total)
        throw std::logic_error("canonical_mwis: reconstructed weight mismatch");
    for (size_t i = 0; i < sol.vertices.size(); ++i)
        for (size_t j = i + 1; j < sol.vertices.size(); ++j)
            if (g.has_edge(sol.vertices[i], sol.vertices[j]))
                throw std::logic_error("canonical_mwis: result is not independent");
    return sol;
}

// ---------------------------------------------------------------------------
// Public solvers.

Solution mwis_exact(const WeightedGraph& wg, std::optional<int> cap_override) {
    const int cap = cap_override.value_or(kMwisExactDefaultCap);
    if (wg.graph.vertex_count() > cap)
        throw std::invalid_argument("mwis_exact: graph has " +
                                    std::to_string(wg.graph.vertex_count()) +
                                    " vertices, above the cap of " + std::to_string(cap));
    return canonical_mwis(wg.graph, wg.weights, mwis_value_exact);
}

Solution mwis_chordal(const WeightedGraph& wg) {
    ChordalityResult ch = chordality(wg.graph);
    if (!ch)
        throw NotChordalError("mwis_chordal: input is not chordal", ch.cycle);
    return canonical_mwis(wg.graph, wg.weights, mwis_value_chordal);
}

Solution mwis_nearly_chordal(const WeightedGraph& wg) {
    NearlyChordalResult nc = is_nearly_chordal(wg.graph);
    if (!nc)
        throw NotChordalError("mwis_nearly_chordal: graph outside N[" +
                                  std::to_string(nc.vertex) + "] is not chordal",
                              nc.cycle);
    return canonical_mwis(wg.graph, wg.weights, mwis_value_nearly_chordal);
}

Solution mwis_hole_banner_free(const WeightedGraph& wg, bool check_class) {
    if (check_class) {
        ClassCheckResult membership = is_in_class(wg.graph, hole_banner_free());
        if (!membership)
            throw std::invalid_argument("mwis_hole_banner_free: " + membership.describe());
    }
    return canonical_mwis(wg.graph, wg.weights, mwis_value_decomposed);
}

} // namespace edsq
