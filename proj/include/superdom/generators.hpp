#pragma once

// Deterministic constructors for the standard graph classes: paths, cycles,
// complete and complete bipartite graphs, stars and friendship graphs.

#include <string>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

inline Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, edges);
}

inline Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Sides {0..n-1} and {n..n+m-1}.
inline Graph make_complete_bipartite(int n, int m) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(u, n + v);
    return Graph(n + m, edges);
}

// K_{1,n}: centre 0, leaves 1..n; order n+1.
inline Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<Edge> edges;
    for (int v = 1; v <= n; ++v) edges.emplace_back(0, v);
    return Graph(n + 1, edges);
}

// F_n: n triangles sharing the central vertex 0; triangle i (1-based) uses
// the rim vertices 2i-1 and 2i. Order 2n+1, 3n edges.
inline Graph make_friendship(int n) {
    if (n < 1) throw std::invalid_argument("friendship: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(0, 2 * i);
        edges.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph(2 * n + 1, edges);
}

enum class GraphClass {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Friendship,
};

inline GraphClass parse_graph_class(const std::string& name) {
    if (name == "path") return GraphClass::Path;
    if (name == "cycle") return GraphClass::Cycle;
    if (name == "complete") return GraphClass::Complete;
    if (name == "complete_bipartite") return GraphClass::CompleteBipartite;
    if (name == "star") return GraphClass::Star;
    if (name == "friendship") return GraphClass::Friendship;
    throw std::invalid_argument("unknown graph class '" + name + "'");
}

// params: one integer for every class except complete_bipartite (two).
inline Graph generate(GraphClass cls, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("generate: wrong number of parameters");
    };
    switch (cls) {
        case GraphClass::Path: want(1); return make_path(params[0]);
        case GraphClass::Cycle: want(1); return make_cycle(params[0]);
        case GraphClass::Complete: want(1); return make_complete(params[0]);
        case GraphClass::CompleteBipartite:
            want(2);
            return make_complete_bipartite(params[0], params[1]);
        case GraphClass::Star: want(1); return make_star(params[0]);
        case GraphClass::Friendship: want(1); return make_friendship(params[0]);
    }
    throw std::logic_error("generate: unreachable");
}

}  // namespace superdom
