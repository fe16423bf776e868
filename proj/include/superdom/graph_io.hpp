#pragma once

// Plain-text graph format:
//
//   # comment
//   n 4
//   e 0 1
//   e 1 2
//
// One `n` header, then `e u v` lines with 0-based endpoints. Duplicate edges
// (in either orientation) are an error. Serialization is canonical (edges
// with u < v, sorted), so parse/serialize round-trips are byte-exact.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Graph read_graph(std::istream& in) {
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (n >= 0) fail("duplicate 'n' header");
            if (!(ls >> n)) fail("malformed 'n' header");
            if (n < 1) fail("vertex count must be >= 1");
            if (n > kMaxVertices) fail("vertex count exceeds limit");
            seen.assign(n, std::vector<bool>(n, false));
        } else if (tag == "e") {
            if (n < 0) fail("edge before 'n' header");
            int u, v;
            if (!(ls >> u >> v)) fail("malformed edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                fail("edge endpoint out of range");
            if (u == v) fail("self-loop rejected");
            if (seen[u][v]) fail("duplicate edge");
            seen[u][v] = seen[v][u] = true;
            edges.emplace_back(u, v);
        } else {
            fail("unknown directive '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing content '" + rest + "'");
    }
    if (n < 0) throw ParseError("missing 'n' header");
    return Graph(n, edges);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << "\n";
    for (const auto& [u, v] : g.edge_list()) out << "e " << u << " " << v << "\n";
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream ss;
    write_graph(ss, g);
    return ss.str();
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    write_graph(out, g);
}

}  // namespace superdom
