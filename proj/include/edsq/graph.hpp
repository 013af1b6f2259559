#ifndef EDSQ_GRAPH_HPP
#define EDSQ_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace edsq {

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

/// Immutable simple undirected graph with 0-based vertex indices.
///
/// Adjacency is kept both as sorted index vectors (for ordered iteration)
/// and, for graphs up to the bitset threshold, as packed bit rows so that
/// membership tests and neighborhood intersections are O(n/64).
class Graph {
  public:
    static constexpr int kDefaultBitsetThreshold = 4096;

    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u, v) pairs with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Closed neighborhood N[v], sorted.
    VertexSet closed_neighborhood(int v) const;

    bool is_connected() const;
    std::vector<VertexSet> connected_components() const;

    /// Packed bit row for v (size ceil(n/64)); empty when the graph is
    /// above the bitset threshold.
    const std::vector<std::uint64_t>& bit_row(int v) const { return bits_[v]; }
    bool has_bit_rows() const { return !bits_.empty() && !bits_[0].empty() && n_ > 0; }

    void check_vertex(int v) const;

  private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::uint64_t>> bits_;
};

/// Path on k vertices: 0-1-...-(k-1).
Graph path_graph(int k);
/// Cycle on k vertices (k >= 3).
Graph cycle_graph(int k);
/// Complete graph on k vertices.
Graph complete_graph(int k);
/// Graph on k vertices with no edges.
Graph empty_graph(int k);

/// Square of g: same vertices, edge iff the distance in g is 1 or 2.
Graph square(const Graph& g);

/// BFS distance between u and v; nullopt when they are in different
/// components.
std::optional<int> distance(const Graph& g, int u, int v);

/// All BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Induced subgraph together with the relabeling back to the host graph.
struct InducedSubgraph {
    Graph graph;
    /// vertices[i] is the host index of subgraph vertex i; sorted ascending.
    VertexSet vertices;
};

/// Subgraph induced by s (s must be a valid vertex set of g).
InducedSubgraph induced(const Graph& g, const VertexSet& s);

/// Chordality verdict: either a perfect elimination ordering or a
/// chordless cycle of length >= 4 (in cycle order) as counterexample.
struct ChordalityResult {
    bool chordal = false;
    std::vector<int> peo;   // elimination order, first eliminated first
    std::vector<int> cycle; // chordless cycle witness when not chordal

    explicit operator bool() const { return chordal; }
};

/// Certifying chordality test via LexBFS; the returned PEO is re-validated,
/// and on failure a chordless cycle is extracted as witness.
ChordalityResult chordality(const Graph& g);

/// LexBFS visit order starting from the smallest vertex.
std::vector<int> lex_bfs_order(const Graph& g);

/// Checks that order (elimination order, first eliminated first) is a
/// perfect elimination ordering of g. Returns a failing triple
/// (v, parent, non-adjacent later neighbor) when it is not.
std::optional<std::array<int, 3>> find_peo_violation(const Graph& g, const std::vector<int>& order);

/// First chordless cycle of length >= min_len (4 or 5) found by the
/// induced-path search; nullopt when none exists.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g, int min_len);

/// True when s is sorted ascending without duplicates and all entries are
/// valid vertices of g.
bool is_valid_vertex_set(const Graph& g, const VertexSet& s);

} // namespace edsq

#endif
