#ifndef EDSQ_VERIFY_HPP
#define EDSQ_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edsq/graph.hpp"

namespace edsq {

/// Structural statements checked by the fuzzer. Each binds a class
/// precondition, optionally an efficient-domination precondition, and a
/// decidable conclusion. The Mut* entries are deliberately falsified
/// conclusions used to prove the harness can detect counterexamples.
enum class TheoremId {
    Thm2SquareP5Free,
    Thm5iSquareNoBigCycles,
    Thm5iiSquareC5Free,
    Thm6SquareBannerFree,
    Thm9AtomsNearlyChordal,
    LemmaPrimeBannerFreeK23Free,
    MutSquareTriangleFree,
    MutSquareP4Free,
    MutAtomsChordal,
};

std::vector<TheoremId> all_theorems();
bool is_mutation(TheoremId t);
std::string theorem_name(TheoremId t);
std::optional<TheoremId> theorem_from_name(const std::string& name);

enum class TheoremVerdict { NotApplicable, Pass, Violation };

struct TheoremWitness {
    std::string description;
    std::vector<int> vertices;
};

struct TheoremCheck {
    TheoremVerdict verdict = TheoremVerdict::NotApplicable;
    TheoremWitness witness;
};

/// Checks preconditions with exact oracles (class membership, brute-force
/// e.d. existence, pairwise-closure primality), then evaluates the
/// conclusion. Theorems that need an e.d. are limited to n <= 20.
TheoremCheck check_theorem(TheoremId t, const Graph& g);

struct FuzzViolation {
    std::uint64_t attempt = 0;
    std::uint64_t attempt_seed = 0;
    Graph graph;
    TheoremWitness witness;
};

struct FuzzTrialLog {
    std::uint64_t attempt = 0;
    std::uint64_t attempt_seed = 0;
    int n = 0;
    TheoremVerdict verdict = TheoremVerdict::Pass;
    TheoremWitness witness;
};

struct FuzzReport {
    TheoremId theorem{};
    std::uint64_t seed = 0;
    int max_n = 0;
    std::uint64_t requested = 0;
    std::uint64_t trials_attempted = 0;
    std::uint64_t trials_qualified = 0;
    std::vector<FuzzViolation> violations;
    std::vector<FuzzTrialLog> log; // one entry per qualified trial
    bool complete = true;
    double elapsed_seconds = 0.0;

    bool passed() const { return complete && violations.empty(); }
};

/// Generates qualified graphs with counter-derived per-attempt seeds and
/// aggregates verdicts. Fully deterministic for a given
/// (theorem, count, max_n, seed), independent of the job count.
FuzzReport fuzz(TheoremId t, std::uint64_t count, int max_n, std::uint64_t seed, int jobs = 1);

} // namespace edsq

#endif
