#ifndef EDSQ_WED_HPP
#define EDSQ_WED_HPP

#include <optional>
#include <string>
#include <vector>

#include "edsq/graph.hpp"
#include "edsq/mwis.hpp"
#include "edsq/patterns.hpp"

namespace edsq {

/// Verdict of the efficient-domination check. On failure `witness` is a
/// violating vertex: an endpoint of an edge inside d, or a vertex
/// outside d with zero or at least two neighbors in d.
struct EdCheckResult {
    enum class Reason { Ok, InternalEdge, Uncovered, MultiplyCovered };
    bool ok = false;
    int witness = -1;
    Reason reason = Reason::Ok;

    explicit operator bool() const { return ok; }
};

EdCheckResult is_efficient_dominating(const Graph& g, const VertexSet& d);

/// All efficient dominating sets, lexicographically sorted. Enumerates
/// exact covers of V by closed neighborhoods. Throws above the cap.
std::vector<VertexSet> brute_force_eds(const Graph& g, int cap = 20);
constexpr int kBruteForceEdCap = 20;

enum class Objective { Minimize, Maximize, ExistsOnly };
enum class WedStrategy { Auto, P6S113, P6Bull, Exact };

/// Thrown when --check-class is requested and the input is outside the
/// strategy's graph class, or when a trusted class assumption is
/// discovered to be false.
class ClassCheckError : public std::runtime_error {
  public:
    ClassCheckError(std::string what, ClassCheckResult witness)
        : std::runtime_error(std::move(what)), witness(std::move(witness)) {}
    ClassCheckResult witness;
};

/// Weighted efficient domination via maximum weight independent set on
/// the square. Returns nullopt when no efficient dominating set exists.
std::optional<Solution> solve_wed(const WeightedGraph& wg, Objective objective,
                                  WedStrategy strategy = WedStrategy::Auto,
                                  bool check_class = false);

std::string objective_name(Objective o);
std::string strategy_name(WedStrategy s);
std::optional<Objective> objective_from_name(const std::string& name);
std::optional<WedStrategy> strategy_from_name(const std::string& name);

} // namespace edsq

#endif
