#ifndef EDSQ_PATTERNS_HPP
#define EDSQ_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "edsq/graph.hpp"

namespace edsq {

/// Fixed catalog of forbidden induced subgraphs (<= 7 vertices each).
enum class PatternId {
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    C4,
    C5,
    Claw,  // S_{1,1,1}
    Chair, // S_{1,1,2}
    S113,
    S122,
    Bull,
    Banner,
    K23,
    TwoP3,
    TwoK2,
};

/// The concrete graph for a pattern id.
const Graph& pattern_graph(PatternId id);
std::string pattern_name(PatternId id);
std::optional<PatternId> pattern_from_name(const std::string& name);
std::vector<PatternId> all_patterns();

/// Injective map from pattern vertices to host vertices that preserves
/// edges and non-edges.
struct Embedding {
    PatternId pattern{};
    std::vector<int> map; // map[i] = host vertex of pattern vertex i
};

/// First induced embedding of the pattern into g, if any. Backtracking
/// search anchored on the pattern's highest-degree vertex with
/// degree-feasibility pruning.
std::optional<Embedding> find_induced(const Graph& g, PatternId p);

/// True when phi is an induced embedding of its pattern into g.
bool check_embedding(const Graph& g, const Embedding& phi);

/// First chordless cycle of length >= min_len (min_len >= 5), in cycle
/// order. For min_len == 5 this uses the induced-P4 search; larger
/// thresholds fall back to exact enumeration and require n <= 16.
std::optional<std::vector<int>> find_hole(const Graph& g, int min_len = 5);

/// Hereditary class given by forbidden patterns, optionally also
/// forbidding all holes (chordless C_k, k >= 5).
struct ClassSpec {
    std::string name;
    std::vector<PatternId> forbidden;
    bool hole_free = false;
};

ClassSpec p6_s113_free();
ClassSpec p6_bull_free();
ClassSpec hole_banner_free();
ClassSpec banner_free();
std::optional<ClassSpec> class_from_name(const std::string& name);

/// Membership verdict with the violating witness when not a member.
struct ClassCheckResult {
    bool member = false;
    std::optional<Embedding> pattern_witness;
    std::vector<int> hole_witness;

    explicit operator bool() const { return member; }
    std::string describe() const;
};

/// Checks the forbidden patterns in catalog order, then holes.
ClassCheckResult is_in_class(const Graph& g, const ClassSpec& spec);

} // namespace edsq

#endif
