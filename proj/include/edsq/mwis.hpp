#ifndef EDSQ_MWIS_HPP
#define EDSQ_MWIS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edsq/graph.hpp"

namespace edsq {

using Weight = std::int64_t;
using WeightVec = std::vector<Weight>;

/// Graph with per-vertex signed integer weights. Weights are capped at
/// |w| <= 2^31 so the efficient-domination reduction constant keeps
/// 64-bit headroom.
struct WeightedGraph {
    Graph graph;
    WeightVec weights;

    WeightedGraph(Graph g, WeightVec w);
};

enum class SolutionKind { IndependentSet, EfficientDominatingSet };

/// Certified vertex set: members are pairwise non-adjacent and
/// total_weight is the sum of their weights.
struct Solution {
    VertexSet vertices;
    Weight total_weight = 0;
    SolutionKind kind = SolutionKind::IndependentSet;
};

/// Thrown when a solver that requires chordal input sees a chordless
/// cycle of length >= 4.
class NotChordalError : public std::runtime_error {
  public:
    NotChordalError(std::string what, std::vector<int> cycle)
        : std::runtime_error(std::move(what)), cycle(std::move(cycle)) {}
    std::vector<int> cycle;
};

/// Thrown by the decomposition pipeline when a prime atom fails the
/// nearly-chordal test, i.e. the input was not (hole,banner)-free.
class StructureViolation : public std::runtime_error {
  public:
    StructureViolation(std::string what, int vertex, std::vector<int> cycle)
        : std::runtime_error(std::move(what)), vertex(vertex), cycle(std::move(cycle)) {}
    int vertex;
    std::vector<int> cycle;
};

/// Exact optimal MWIS value (empty set allowed, so always >= 0).
using ValueEngine = std::function<Weight(const Graph&, const WeightVec&)>;

/// Value engines. All of them treat the empty set as feasible.
Weight mwis_value_exact(const Graph& g, const WeightVec& w);
Weight mwis_value_chordal(const Graph& g, const WeightVec& w);        // throws NotChordalError
Weight mwis_value_nearly_chordal(const Graph& g, const WeightVec& w); // throws NotChordalError
Weight mwis_value_decomposed(const Graph& g, const WeightVec& w);     // throws StructureViolation

/// Number of times the exact branch-and-bound engine has run in this
/// process (instrumentation for the polynomial-path checks).
std::uint64_t mwis_exact_call_count();

/// Turns a value engine into a canonical solution: greedily includes the
/// smallest vertex that still extends to an optimal independent set,
/// which yields the lexicographically smallest optimum. The result is
/// re-verified (independence and weight) before returning.
Solution canonical_mwis(const Graph& g, const WeightVec& w, const ValueEngine& engine);

/// Branch-and-bound oracle. Refuses graphs above the cap unless
/// overridden.
Solution mwis_exact(const WeightedGraph& wg, std::optional<int> cap_override = std::nullopt);
constexpr int kMwisExactDefaultCap = 40;

/// PEO-based weight-shifting solver for chordal graphs.
Solution mwis_chordal(const WeightedGraph& wg);

/// max over v of w(v) + MWIS(chordal part outside N[v]).
Solution mwis_nearly_chordal(const WeightedGraph& wg);

/// Layered exact solver for (hole,banner)-free graphs: connected
/// components, module contraction, clique-separator decomposition, and
/// nearly-chordal atoms. When check_class is set the input class is
/// verified up front.
Solution mwis_hole_banner_free(const WeightedGraph& wg, bool check_class = false);

} // namespace edsq

#endif
