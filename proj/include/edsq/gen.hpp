#ifndef EDSQ_GEN_HPP
#define EDSQ_GEN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "edsq/graph.hpp"
#include "edsq/mwis.hpp"
#include "edsq/patterns.hpp"

namespace edsq {

/// Counter-based deterministic generator: output i is the splitmix64
/// finalizer applied to seed + (i+1) * 0x9E3779B97F4A7C15. Identified by
/// kRngAlgorithm so seeds stay reproducible across implementations.
inline constexpr const char* kRngAlgorithm = "splitmix64-v1";

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, bound) via rejection sampling; bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform draw in [lo, hi], inclusive.
    std::int64_t in_range(std::int64_t lo, std::int64_t hi);

    /// Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Independent stream for a derived task (fuzz trials, attempts).
    static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

  private:
    std::uint64_t state_;
};

struct GenConfig {
    int n = 1;
    double edge_probability = 0.5;
    std::optional<ClassSpec> graph_class;
    bool require_ed = false;
    std::uint64_t seed = 0;
    int max_attempts = 256;
    std::pair<Weight, Weight> weight_range{1, 1};
};

/// Erdos-Renyi draw G(n, p); deterministic per seed.
Graph random_graph(const GenConfig& cfg);

/// Rejection sampling with local repair: while a forbidden pattern or
/// hole is present, delete one uniformly chosen edge of the witness.
/// Returns the graph and uniformly drawn weights, or nullopt after
/// max_attempts (only possible when require_ed keeps rejecting).
std::optional<std::pair<Graph, WeightVec>> random_in_class(const GenConfig& cfg);

/// All 2^(n(n-1)/2) labeled graphs on n <= 7 vertices in ascending
/// edge-bitmask order.
void exhaustive_graphs(int n, const std::function<void(const Graph&)>& fn);
std::uint64_t exhaustive_graph_count(int n);

} // namespace edsq

#endif
