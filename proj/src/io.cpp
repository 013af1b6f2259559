#include "edsq/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace edsq {

WeightedGraph parse_graph_file(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    long long edges_seen = 0;
    std::vector<std::pair<int, int>> edges;
    WeightVec weights;
    std::vector<char> weight_set;

    while (std::getline(in, line)) {
        ++line_no;
        // Strip trailing carriage returns from files written on Windows.
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (!have_header) {
            std::string kind;
            if (tag != "p" || !(ss >> kind >> n >> m) || kind != "ewd")
                throw ParseError(line_no, "expected header 'p ewd <n> <m>'");
            if (n < 0 || m < 0)
                throw ParseError(line_no, "negative vertex or edge count");
            std::string extra;
            if (ss >> extra)
                throw ParseError(line_no, "trailing tokens after header");
            weights.assign(n, 1);
            weight_set.assign(n, 0);
            have_header = true;
            continue;
        }
        if (tag == "v") {
            long long idx, w;
            if (!(ss >> idx >> w))
                throw ParseError(line_no, "expected 'v <index> <weight>'");
            if (idx < 0 || idx >= n)
                throw ParseError(line_no, "vertex index out of range");
            if (weight_set[idx])
                throw ParseError(line_no, "duplicate weight for vertex " + std::to_string(idx));
            if (w < -(1LL << 31) || w > (1LL << 31))
                throw ParseError(line_no, "|weight| exceeds 2^31");
            weights[idx] = w;
            weight_set[idx] = 1;
        } else if (tag == "e") {
            long long u, v;
            if (!(ss >> u >> v))
                throw ParseError(line_no, "expected 'e <u> <v>'");
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(line_no, "edge endpoint out of range");
            if (u >= v)
                throw ParseError(line_no, "edges must satisfy u < v");
            ++edges_seen;
            if (edges_seen > m)
                throw ParseError(line_no, "more edges than declared in header");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else {
            throw ParseError(line_no, "unknown line type '" + tag + "'");
        }
        std::string extra;
        if (ss >> extra)
            throw ParseError(line_no, "trailing tokens");
    }
    if (!have_header)
        throw ParseError(line_no ? line_no : 1, "missing 'p ewd' header");
    if (edges_seen != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges_seen));
    try {
        return WeightedGraph(Graph(n, edges), std::move(weights));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

WeightedGraph parse_graph_file(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph_file(ss);
}

WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_graph_file(in);
}

std::string serialize_graph_file(const WeightedGraph& wg) {
    std::ostringstream out;
    const Graph& g = wg.graph;
    out << "p ewd " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "v " << v << " " << wg.weights[v] << "\n";
    for (auto [u, v] : g.edges())
        out << "e " << u << " " << v << "\n";
    return out.str();
}

std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    out += "}";
    return out;
}

} // namespace edsq
