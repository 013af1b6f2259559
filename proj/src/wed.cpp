#include "edsq/wed.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace edsq {

EdCheckResult is_efficient_dominating(const Graph& g, const VertexSet& d) {
    if (!is_valid_vertex_set(g, d))
        throw std::invalid_argument("is_efficient_dominating: invalid vertex set");
    std::vector<char> in_d(g.vertex_count(), 0);
    for (int v : d)
        in_d[v] = 1;
    for (int v : d)
        for (int u : g.neighbors(v))
            if (in_d[u])
                return EdCheckResult{false, std::max(u, v), EdCheckResult::Reason::InternalEdge};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_d[v])
            continue;
        int hits = 0;
        for (int u : g.neighbors(v))
            hits += in_d[u];
        if (hits == 0)
            return EdCheckResult{false, v, EdCheckResult::Reason::Uncovered};
        if (hits >= 2)
            return EdCheckResult{false, v, EdCheckResult::Reason::MultiplyCovered};
    }
    return EdCheckResult{true, -1, EdCheckResult::Reason::Ok};
}

namespace {

// Exact cover of V by closed neighborhoods: branch on the candidates
// covering the smallest uncovered vertex.
void ed_cover_rec(const Graph& g, std::vector<int>& cover_count, VertexSet& chosen,
                  std::vector<VertexSet>& out) {
    const int n = g.vertex_count();
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (cover_count[v] == 0) {
            u = v;
            break;
        }
    if (u < 0) {
        out.push_back(chosen);
        return;
    }
    VertexSet candidates = g.closed_neighborhood(u);
    for (int v : candidates) {
        bool free = true;
        for (int x : g.closed_neighborhood(v))
            if (cover_count[x] != 0) {
                free = false;
                break;
            }
        if (!free)
            continue;
        for (int x : g.closed_neighborhood(v))
            ++cover_count[x];
        chosen.push_back(v);
        ed_cover_rec(g, cover_count, chosen, out);
        chosen.pop_back();
        for (int x : g.closed_neighborhood(v))
            --cover_count[x];
    }
}

} // namespace

std::vector<VertexSet> brute_force_eds(const Graph& g, int cap) {
    if (g.vertex_count() > cap)
        throw std::invalid_argument("brute_force_eds: graph has " +
                                    std::to_string(g.vertex_count()) +
                                    " vertices, above the cap of " + std::to_string(cap));
    std::vector<VertexSet> out;
    std::vector<int> cover_count(g.vertex_count(), 0);
    VertexSet chosen;
    ed_cover_rec(g, cover_count, chosen, out);
    for (VertexSet& d : out) {
        std::sort(d.begin(), d.end());
        if (!is_efficient_dominating(g, d))
            throw std::logic_error("brute_force_eds: enumerated set is not an e.d.");
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

WedStrategy dispatch_auto(const Graph& g) {
    if (is_in_class(g, p6_bull_free()))
        return WedStrategy::P6Bull;
    if (is_in_class(g, p6_s113_free()))
        return WedStrategy::P6S113;
    return WedStrategy::Exact;
}

} // namespace

std::optional<Solution> solve_wed(const WeightedGraph& wg, Objective objective,
                                  WedStrategy strategy, bool check_class) {
    const Graph& g = wg.graph;
    const int n = g.vertex_count();

    if (strategy == WedStrategy::Auto)
        strategy = dispatch_auto(g);
    if (check_class && (strategy == WedStrategy::P6S113 || strategy == WedStrategy::P6Bull)) {
        ClassSpec spec = strategy == WedStrategy::P6S113 ? p6_s113_free() : p6_bull_free();
        ClassCheckResult membership = is_in_class(g, spec);
        if (!membership)
            throw ClassCheckError("solve_wed: input is not " + spec.name + ": " +
                                      membership.describe(),
                                  membership);
    }

    // Reduction weights on the square: w'(v) = M*|N[v]| + s*w(v) with
    // M = 1 + 2*sum|w|, which strictly separates efficient dominating
    // sets (covering all n vertices) from every other independent set of
    // the square.
    Weight abs_sum = 0;
    for (Weight x : wg.weights)
        abs_sum += x < 0 ? -x : x;
    const Weight sign = objective == Objective::Minimize ? -1
                        : objective == Objective::Maximize ? 1
                                                           : 0;
    const Weight big = objective == Objective::ExistsOnly ? 1 : 1 + 2 * abs_sum;
    // Bound the sum of all reduction weights so that even additive
    // branch-and-bound bookkeeping stays inside 64 bits.
    __int128 reduced_sum = 0;
    for (int v = 0; v < n; ++v)
        reduced_sum += static_cast<__int128>(big) * (g.degree(v) + 1) + std::abs(wg.weights[v]);
    if (reduced_sum > (static_cast<__int128>(1) << 62))
        throw std::overflow_error("solve_wed: reduction weights would overflow 64-bit range");

    Graph sq = square(g);
    WeightVec reduced(n);
    for (int v = 0; v < n; ++v)
        reduced[v] = big * (g.degree(v) + 1) + sign * wg.weights[v];
    const Weight threshold = objective == Objective::ExistsOnly ? n : big * n - abs_sum;

    ValueEngine engine;
    if (strategy == WedStrategy::P6Bull)
        engine = mwis_value_decomposed;
    else
        engine = mwis_value_exact;

    Weight optimum;
    try {
        optimum = engine(sq, reduced);
    } catch (const StructureViolation&) {
        // The pipeline met a prime atom that is not nearly chordal, so
        // the square is not (hole,banner)-free. For a (P6,bull)-free
        // input that certifies that no efficient dominating set exists;
        // otherwise the class assumption was wrong.
        ClassCheckResult membership = is_in_class(g, p6_bull_free());
        if (!membership)
            throw ClassCheckError(
                "solve_wed: strategy p6-bull used on a graph that is not (P6,bull)-free: " +
                    membership.describe(),
                membership);
        bool square_violates = find_hole(sq, 5).has_value() ||
                               find_induced(sq, PatternId::Banner).has_value();
        if (!square_violates)
            throw std::logic_error("solve_wed: pipeline violation without a square certificate");
        return std::nullopt;
    }

    if (optimum < threshold)
        return std::nullopt;

    Solution picked = canonical_mwis(sq, reduced, engine);

    // Reduction soundness: the chosen set must partition V into closed
    // neighborhoods, i.e. be an efficient dominating set.
    std::vector<char> covered(n, 0);
    Weight covered_total = 0;
    for (int v : picked.vertices) {
        for (int x : g.closed_neighborhood(v)) {
            if (covered[x])
                throw std::logic_error("solve_wed: closed neighborhoods overlap");
            covered[x] = 1;
            ++covered_total;
        }
    }
    if (covered_total != n)
        throw std::logic_error("solve_wed: optimum does not cover every vertex");
    if (!is_efficient_dominating(g, picked.vertices))
        throw std::logic_error("solve_wed: returned set failed the e.d. re-check");

    Solution result;
    result.vertices = picked.vertices;
    result.kind = SolutionKind::EfficientDominatingSet;
    for (int v : picked.vertices)
        result.total_weight += wg.weights[v];
    if (objective != Objective::ExistsOnly &&
        picked.total_weight != big * n + sign * result.total_weight)
        throw std::logic_error("solve_wed: reduction value identity failed");
    return result;
}

std::string objective_name(Objective o) {
    switch (o) {
    case Objective::Minimize:
        return "min";
    case Objective::Maximize:
        return "max";
    case Objective::ExistsOnly:
        return "exists";
    }
    return "?";
}

std::string strategy_name(WedStrategy s) {
    switch (s) {
    case WedStrategy::Auto:
        return "auto";
    case WedStrategy::P6S113:
        return "p6-s113";
    case WedStrategy::P6Bull:
        return "p6-bull";
    case WedStrategy::Exact:
        return "exact";
    }
    return "?";
}

std::optional<Objective> objective_from_name(const std::string& name) {
    if (name == "min")
        return Objective::Minimize;
    if (name == "max")
        return Objective::Maximize;
    if (name == "exists")
        return Objective::ExistsOnly;
    return std::nullopt;
}

std::optional<WedStrategy> strategy_from_name(const std::string& name) {
    if (name == "auto")
        return WedStrategy::Auto;
    if (name == "p6-s113")
        return WedStrategy::P6S113;
    if (name == "p6-bull")
        return WedStrategy::P6Bull;
    if (name == "exact")
        return WedStrategy::Exact;
    return std::nullopt;
}

} // namespace edsq
