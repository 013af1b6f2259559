#ifndef EDSQ_DECOMPOSE_HPP
#define EDSQ_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "edsq/graph.hpp"

namespace edsq {

/// Smallest module containing the lexicographically first vertex pair
/// whose pairwise closure is proper: grows {u,v} by repeatedly absorbing
/// any outside vertex adjacent to some but not all current members.
/// Returns nullopt when the graph is prime. Throws for n < 2.
std::optional<VertexSet> find_nontrivial_module(const Graph& g);

/// True when no outside vertex distinguishes two members of m.
bool is_module(const Graph& g, const VertexSet& m);

/// True when g has only trivial modules (checked pairwise; graphs with
/// fewer than 2 vertices count as prime).
bool is_prime(const Graph& g);

/// Clique separator of a connected graph found by scanning a Lex-M
/// minimal elimination ordering: returns the separator C and the
/// component A of the scan vertex in g - C. Nullopt when g is an atom.
std::optional<std::pair<VertexSet, VertexSet>> find_clique_separator(const Graph& g);

/// Lex-M minimal elimination ordering. order[i] is the vertex at
/// position i (ascending alpha); madj_up[v] lists the neighbors of v in
/// the filled graph with larger alpha.
struct LexMResult {
    std::vector<int> order;
    std::vector<std::vector<int>> madj_up;
};
LexMResult lex_m_order(const Graph& g);

/// Recursive clique-separator decomposition of a connected graph.
struct AtomTree {
    struct Node {
        VertexSet vertices;  // in the labels of the decomposed graph
        VertexSet separator; // clique used to split this node; empty for atoms
        int parent = -1;
        std::array<int, 2> children{-1, -1};
        bool is_atom() const { return separator.empty(); }
    };
    std::vector<Node> nodes; // nodes[0] is the root
    std::vector<int> atom_nodes;

    std::vector<VertexSet> atoms() const;
    std::vector<VertexSet> separators() const;
};

/// Splits on clique separators until every leaf is an atom. Throws on
/// disconnected input.
AtomTree atoms(const Graph& g);

/// Nearly-chordal test: deleting any closed neighborhood must leave a
/// chordal graph. On failure reports the vertex and a chordless cycle
/// (length >= 4) of g - N[v].
struct NearlyChordalResult {
    bool ok = false;
    int vertex = -1;
    std::vector<int> cycle;

    explicit operator bool() const { return ok; }
};
NearlyChordalResult is_nearly_chordal(const Graph& g);

} // namespace edsq

#endif
