#ifndef EDSQ_IO_HPP
#define EDSQ_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "edsq/mwis.hpp"

namespace edsq {

/// Parse failure with the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
    int line;
};

/// Problem file format (text, 0-indexed vertices):
///   p ewd <n> <m>
///   v <index> <weight>     (optional; missing vertices default to 1)
///   e <u> <v>              (u < v, no duplicates)
/// Lines starting with '#' are comments and may appear anywhere.
WeightedGraph parse_graph_file(std::istream& in);
WeightedGraph parse_graph_file(const std::string& text);
WeightedGraph load_graph_file(const std::string& path);

/// Deterministic serialization: one v line per vertex, e lines sorted.
/// parse(serialize(x)) reproduces x exactly.
std::string serialize_graph_file(const WeightedGraph& wg);

/// Renders {a,b,c} for a vertex set.
std::string format_vertex_set(const VertexSet& s);

} // namespace edsq

#endif
