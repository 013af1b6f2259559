#include "edsq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iterator>
#include <stdexcept>
#include <thread>

#include "edsq/decompose.hpp"
#include "edsq/gen.hpp"
#include "edsq/patterns.hpp"
#include "edsq/wed.hpp"

namespace edsq {

namespace {

struct TheoremSpec {
    TheoremId id;
    const char* name;
    bool mutation;
    bool need_ed;    // precondition: brute_force_eds non-empty
    bool need_prime; // precondition: connected and only trivial modules
    ClassSpec (*graph_class)();
};

ClassSpec any_graph() { return ClassSpec{"all graphs", {}, false}; }

const std::vector<TheoremSpec>& theorem_table() {
    static const std::vector<TheoremSpec> table = {
        {TheoremId::Thm2SquareP5Free, "thm2", false, true, false, p6_s113_free},
        {TheoremId::Thm5iSquareNoBigCycles, "thm5i", false, false, false, p6_bull_free},
        {TheoremId::Thm5iiSquareC5Free, "thm5ii", false, true, false, p6_bull_free},
        {TheoremId::Thm6SquareBannerFree, "thm6", false, true, false, p6_bull_free},
        {TheoremId::Thm9AtomsNearlyChordal, "thm9", false, false, true, hole_banner_free},
        {TheoremId::LemmaPrimeBannerFreeK23Free, "lemma-k23", false, false, true, banner_free},
        {TheoremId::MutSquareTriangleFree, "mut-triangle", true, false, false, any_graph},
        {TheoremId::MutSquareP4Free, "mut-p4", true, false, false, p6_bull_free},
        {TheoremId::MutAtomsChordal, "mut-atoms-chordal", true, false, true, hole_banner_free},
    };
    return table;
}

const TheoremSpec& spec_of(TheoremId t) {
    for (const auto& spec : theorem_table())
        if (spec.id == t)
            return spec;
    throw std::invalid_argument("unknown theorem id");
}

std::optional<std::vector<int>> find_triangle(const Graph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u)
                continue;
            for (int w : g.neighbors(v))
                if (w > v && g.has_edge(u, w))
                    return std::vector<int>{u, v, w};
        }
    return std::nullopt;
}

TheoremWitness embedding_witness(const std::string& what, const Embedding& phi) {
    TheoremWitness w;
    w.description = what;
    w.vertices = phi.map;
    return w;
}

// True when the precondition holds; e.d.-conditioned checks use the
// brute-force oracle and therefore refuse graphs beyond its cap.
bool precondition_holds(const TheoremSpec& spec, const Graph& g) {
    if (!is_in_class(g, spec.graph_class()))
        return false;
    if (spec.need_prime) {
        if (!g.is_connected())
            return false;
        if (!is_prime(g))
            return false;
    }
    if (spec.need_ed) {
        if (g.vertex_count() > kBruteForceEdCap)
            throw std::invalid_argument("check_theorem: " + std::string(spec.name) +
                                        " needs the e.d. oracle; use n <= " +
                                        std::to_string(kBruteForceEdCap));
        if (brute_force_eds(g).empty())
            return false;
    }
    return true;
}

TheoremCheck conclusion_check(const TheoremSpec& spec, const Graph& g) {
    TheoremCheck out;
    out.verdict = TheoremVerdict::Pass;
    switch (spec.id) {
    case TheoremId::Thm2SquareP5Free: {
        if (auto phi = find_induced(square(g), PatternId::P5)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = embedding_witness("induced P5 in square", *phi);
        }
        break;
    }
    case TheoremId::Thm5iSquareNoBigCycles: {
        if (auto hole = find_hole(square(g), 6)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = TheoremWitness{"chordless cycle of length >= 6 in square", *hole};
        }
        break;
    }
    case TheoremId::Thm5iiSquareC5Free: {
        if (auto phi = find_induced(square(g), PatternId::C5)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = embedding_witness("induced C5 in square", *phi);
        }
        break;
    }
    case TheoremId::Thm6SquareBannerFree: {
        if (auto phi = find_induced(square(g), PatternId::Banner)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = embedding_witness("induced banner in square", *phi);
        }
        break;
    }
    case TheoremId::Thm9AtomsNearlyChordal:
    case TheoremId::MutAtomsChordal: {
        AtomTree tree = atoms(g);
        for (const VertexSet& atom : tree.atoms()) {
            InducedSubgraph sub = induced(g, atom);
            if (spec.id == TheoremId::Thm9AtomsNearlyChordal) {
                NearlyChordalResult nc = is_nearly_chordal(sub.graph);
                if (!nc) {
                    out.verdict = TheoremVerdict::Violation;
                    TheoremWitness w;
                    w.description = "atom not nearly chordal; deleted N[" +
                                    std::to_string(sub.vertices[nc.vertex]) +
                                    "] leaves a chordless cycle";
                    for (int x : nc.cycle)
                        w.vertices.push_back(sub.vertices[x]);
                    out.witness = w;
                    return out;
                }
            } else {
                ChordalityResult ch = chordality(sub.graph);
                if (!ch) {
                    out.verdict = TheoremVerdict::Violation;
                    TheoremWitness w;
                    w.description = "atom not chordal";
                    for (int x : ch.cycle)
                        w.vertices.push_back(sub.vertices[x]);
                    out.witness = w;
                    return out;
                }
            }
        }
        break;
    }
    case TheoremId::LemmaPrimeBannerFreeK23Free: {
        if (auto phi = find_induced(g, PatternId::K23)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = embedding_witness("induced K23", *phi);
        }
        break;
    }
    case TheoremId::MutSquareTriangleFree: {
        if (auto tri = find_triangle(square(g))) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = TheoremWitness{"triangle in square", *tri};
        }
        break;
    }
    case TheoremId::MutSquareP4Free: {
        if (auto phi = find_induced(square(g), PatternId::P4)) {
            out.verdict = TheoremVerdict::Violation;
            out.witness = embedding_witness("induced P4 in square", *phi);
        }
        break;
    }
    }
    return out;
}

// Witnesses must re-validate against the structure they claim to exhibit.
void revalidate_witness(const TheoremSpec& spec, const Graph& g, const TheoremWitness& w) {
    const Graph sq = square(g);
    auto check_pattern = [&](const Graph& host, PatternId p) {
        Embedding phi{p, w.vertices};
        if (!check_embedding(host, phi))
            throw std::logic_error("fuzz: witness embedding failed re-validation");
    };
    switch (spec.id) {
    case TheoremId::Thm2SquareP5Free:
        check_pattern(sq, PatternId::P5);
        break;
    case TheoremId::Thm5iiSquareC5Free:
        check_pattern(sq, PatternId::C5);
        break;
    case TheoremId::Thm6SquareBannerFree:
        check_pattern(sq, PatternId::Banner);
        break;
    case TheoremId::MutSquareP4Free:
        check_pattern(sq, PatternId::P4);
        break;
    case TheoremId::LemmaPrimeBannerFreeK23Free:
        check_pattern(g, PatternId::K23);
        break;
    case TheoremId::Thm5iSquareNoBigCycles: {
        if (w.vertices.size() < 6)
            throw std::logic_error("fuzz: cycle witness too short");
        for (size_t i = 0; i < w.vertices.size(); ++i)
            for (size_t j = i + 1; j < w.vertices.size(); ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j + 1 == w.vertices.size());
                if (sq.has_edge(w.vertices[i], w.vertices[j]) != consecutive)
                    throw std::logic_error("fuzz: cycle witness failed re-validation");
            }
        break;
    }
    case TheoremId::MutSquareTriangleFree: {
        if (w.vertices.size() != 3 || !sq.has_edge(w.vertices[0], w.vertices[1]) ||
            !sq.has_edge(w.vertices[1], w.vertices[2]) ||
            !sq.has_edge(w.vertices[0], w.vertices[2]))
            throw std::logic_error("fuzz: triangle witness failed re-validation");
        break;
    }
    case TheoremId::Thm9AtomsNearlyChordal:
    case TheoremId::MutAtomsChordal: {
        // The cycle must be chordless in g itself (it lives inside an atom).
        if (w.vertices.size() < 4)
            throw std::logic_error("fuzz: cycle witness too short");
        for (size_t i = 0; i < w.vertices.size(); ++i)
            for (size_t j = i + 1; j < w.vertices.size(); ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j + 1 == w.vertices.size());
                if (g.has_edge(w.vertices[i], w.vertices[j]) != consecutive)
                    throw std::logic_error("fuzz: cycle witness failed re-validation");
            }
        break;
    }
    }
}

} // namespace

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (const auto& spec : theorem_table())
        out.push_back(spec.id);
    return out;
}

bool is_mutation(TheoremId t) { return spec_of(t).mutation; }

std::string theorem_name(TheoremId t) { return spec_of(t).name; }

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (const auto& spec : theorem_table())
        if (name == spec.name)
            return spec.id;
    return std::nullopt;
}

TheoremCheck check_theorem(TheoremId t, const Graph& g) {
    const TheoremSpec& spec = spec_of(t);
    if (!precondition_holds(spec, g))
        return TheoremCheck{TheoremVerdict::NotApplicable, {}};
    TheoremCheck out = conclusion_check(spec, g);
    if (out.verdict == TheoremVerdict::Violation)
        revalidate_witness(spec, g, out.witness);
    return out;
}

namespace {

struct AttemptResult {
    bool qualified = false;
    int n = 0;
    std::uint64_t attempt_seed = 0;
    TheoremCheck check;
    Graph graph;
};

// Edge densities cycled through by the fuzzer; the per-attempt stream
// picks one of these.
constexpr double kDensities[] = {0.1, 0.2, 0.3, 0.45, 0.6, 0.75, 0.9};

AttemptResult run_attempt(const TheoremSpec& spec, std::uint64_t master_seed,
                          std::uint64_t attempt, int max_n) {
    AttemptResult out;
    out.attempt_seed = SplitMix64::child_seed(master_seed, attempt);
    SplitMix64 rng(out.attempt_seed);
    GenConfig cfg;
    cfg.n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n))) + 1;
    cfg.edge_probability = kDensities[rng.below(std::size(kDensities))];
    cfg.graph_class = spec.graph_class();
    cfg.require_ed = spec.need_ed;
    cfg.seed = rng.next();
    cfg.max_attempts = 1; // one draw per fuzz attempt; rejection is counted here
    auto drawn = random_in_class(cfg);
    if (!drawn)
        return out;
    Graph g = std::move(drawn->first);
    if (spec.need_prime && (!g.is_connected() || !is_prime(g)))
        return out;
    out.qualified = true;
    out.n = g.vertex_count();
    out.check = conclusion_check(spec, g);
    if (out.check.verdict == TheoremVerdict::Violation)
        revalidate_witness(spec, g, out.check.witness);
    out.graph = std::move(g);
    return out;
}

} // namespace

FuzzReport fuzz(TheoremId t, std::uint64_t count, int max_n, std::uint64_t seed, int jobs) {
    const TheoremSpec& spec = spec_of(t);
    if (max_n < 1)
        throw std::invalid_argument("fuzz: max_n must be >= 1");
    if (spec.need_ed && max_n > kBruteForceEdCap)
        throw std::invalid_argument("fuzz: " + std::string(spec.name) +
                                    " needs the e.d. oracle; use max_n <= " +
                                    std::to_string(kBruteForceEdCap));
    if (jobs < 1)
        jobs = 1;
    const auto start = std::chrono::steady_clock::now();

    FuzzReport report;
    report.theorem = t;
    report.seed = seed;
    report.max_n = max_n;
    report.requested = count;

    const std::uint64_t budget = std::max<std::uint64_t>(count * 400, 4000);
    std::uint64_t next_attempt = 0;
    while (report.trials_qualified < count && next_attempt < budget) {
        const std::uint64_t chunk =
            std::min<std::uint64_t>(budget - next_attempt, static_cast<std::uint64_t>(jobs) * 8);
        std::vector<AttemptResult> results(chunk);
        if (jobs == 1) {
            for (std::uint64_t i = 0; i < chunk; ++i)
                results[i] = run_attempt(spec, seed, next_attempt + i, max_n);
        } else {
            std::vector<std::thread> pool;
            std::atomic<std::uint64_t> cursor{0};
            for (int j = 0; j < jobs; ++j)
                pool.emplace_back([&] {
                    for (std::uint64_t i = cursor.fetch_add(1); i < chunk; i = cursor.fetch_add(1))
                        results[i] = run_attempt(spec, seed, next_attempt + i, max_n);
                });
            for (auto& th : pool)
                th.join();
        }
        // Aggregate in attempt order so the report does not depend on jobs.
        for (std::uint64_t i = 0; i < chunk && report.trials_qualified < count; ++i) {
            AttemptResult& r = results[i];
            ++report.trials_attempted;
            if (!r.qualified)
                continue;
            ++report.trials_qualified;
            report.log.push_back(
                FuzzTrialLog{next_attempt + i, r.attempt_seed, r.n, r.check.verdict, r.check.witness});
            if (r.check.verdict == TheoremVerdict::Violation)
                report.violations.push_back(FuzzViolation{next_attempt + i, r.attempt_seed,
                                                          std::move(r.graph),
                                                          std::move(r.check.witness)});
        }
        next_attempt += chunk;
    }
    report.complete = report.trials_qualified >= count;
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace edsq
