#pragma once

// Composite constructions: corona, neighbourhood corona, r-gluing, Hajos sum
// and chains. All layouts are deterministic so downstream witnesses and
// golden files stay stable.

#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// G first (0..n_G-1), then copy i of H at n_G + i*n_H. Vertex i of G is
// adjacent to every vertex of its own copy.
inline Graph corona(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges = g.edge_list();
    const auto h_edges = h.edge_list();
    for (int i = 0; i < ng; ++i) {
        const int base = ng + i * nh;
        for (const auto& [a, b] : h_edges) edges.emplace_back(base + a, base + b);
        for (int a = 0; a < nh; ++a) edges.emplace_back(i, base + a);
    }
    return Graph(ng * (1 + nh), edges);
}

// Same layout as corona, but copy i is joined to the G-neighbours of i
// rather than to i itself.
inline Graph neighbourhood_corona(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    std::vector<Edge> edges = g.edge_list();
    const auto h_edges = h.edge_list();
    for (int i = 0; i < ng; ++i) {
        const int base = ng + i * nh;
        for (const auto& [a, b] : h_edges) edges.emplace_back(base + a, base + b);
        const VertexSet& nb = g.row(i);
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            for (int a = 0; a < nh; ++a) edges.emplace_back(w, base + a);
    }
    return Graph(ng * (nh + 1), edges);
}

// Identification order for r-gluing: left_clique[i] merges with
// right_clique[i]. Both lists must induce complete subgraphs.
struct GlueSpec {
    std::vector<int> left_clique;
    std::vector<int> right_clique;
};

namespace detail {

inline void check_clique(const Graph& g, const std::vector<int>& vs,
                         const char* side) {
    std::vector<bool> seen(g.order(), false);
    for (int v : vs) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range(std::string("r_glue: ") + side +
                                    " clique vertex out of range");
        if (seen[v])
            throw std::invalid_argument(std::string("r_glue: duplicate vertex in ") +
                                        side + " clique");
        seen[v] = true;
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j]))
                throw std::invalid_argument(
                    std::string("r_glue: ") + side +
                    " vertices do not induce a complete subgraph");
}

}  // namespace detail

// G1 keeps its indices; the non-clique vertices of G2 follow in ascending
// original order; merged vertices carry the union of both neighbourhoods.
// r = 0 is the disjoint union.
inline Graph r_glue(const Graph& g1, const Graph& g2, const GlueSpec& spec) {
    if (spec.left_clique.size() != spec.right_clique.size())
        throw std::invalid_argument("r_glue: clique lists differ in length");
    detail::check_clique(g1, spec.left_clique, "left");
    detail::check_clique(g2, spec.right_clique, "right");

    const int n1 = g1.order(), n2 = g2.order();
    const int r = static_cast<int>(spec.left_clique.size());

    std::vector<int> map2(n2, -1);  // G2 index -> result index
    for (int i = 0; i < r; ++i) map2[spec.right_clique[i]] = spec.left_clique[i];
    int next = n1;
    for (int v = 0; v < n2; ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<Edge> edges = g1.edge_list();
    for (const auto& [a, b] : g2.edge_list())
        edges.emplace_back(map2[a], map2[b]);
    return Graph(n1 + n2 - r, edges);
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    return r_glue(g1, g2, GlueSpec{});
}

// Edge x1y1 of G1 and edge x2y2 of G2 to operate on.
struct HajosSpec {
    int x1, y1;
    int x2, y2;
};

// Delete x1y1 and x2y2, merge x1 with x2 into index 0, add the edge y1y2.
// Layout: merged vertex 0, then G1 minus x1 ascending, then G2 minus x2.
inline Graph hajos_sum(const Graph& g1, const Graph& g2, const HajosSpec& spec) {
    if (spec.x1 == spec.y1 || spec.x2 == spec.y2)
        throw std::invalid_argument("hajos_sum: edge endpoints must differ");
    if (!g1.has_edge(spec.x1, spec.y1))
        throw std::invalid_argument("hajos_sum: x1y1 is not an edge of G1");
    if (!g2.has_edge(spec.x2, spec.y2))
        throw std::invalid_argument("hajos_sum: x2y2 is not an edge of G2");

    const int n1 = g1.order(), n2 = g2.order();
    std::vector<int> map1(n1), map2(n2);
    int next = 1;
    for (int v = 0; v < n1; ++v) map1[v] = (v == spec.x1) ? 0 : next++;
    for (int v = 0; v < n2; ++v) map2[v] = (v == spec.x2) ? 0 : next++;

    std::vector<Edge> edges;
    for (const auto& [a, b] : g1.edge_list()) {
        if ((a == spec.x1 && b == spec.y1) || (a == spec.y1 && b == spec.x1))
            continue;
        edges.emplace_back(map1[a], map1[b]);
    }
    for (const auto& [a, b] : g2.edge_list()) {
        if ((a == spec.x2 && b == spec.y2) || (a == spec.y2 && b == spec.x2))
            continue;
        edges.emplace_back(map2[a], map2[b]);
    }
    edges.emplace_back(map1[spec.y1], map2[spec.y2]);
    return Graph(n1 + n2 - 1, edges);
}

// Iterated vertex gluing: y_i of graph i is identified with x_{i+1} of
// graph i+1; the merged vertex keeps the left index. anchors[i] = (x_i, y_i).
inline Graph chain(const std::vector<Graph>& graphs,
                   const std::vector<std::pair<int, int>>& anchors) {
    if (graphs.size() < 2)
        throw std::invalid_argument("chain: need at least two graphs");
    if (anchors.size() != graphs.size())
        throw std::invalid_argument("chain: need one (x, y) anchor per graph");
    for (size_t i = 0; i < graphs.size(); ++i) {
        const auto& [x, y] = anchors[i];
        const int n = graphs[i].order();
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw std::out_of_range("chain: anchor out of range");
        if (x == y) throw std::invalid_argument("chain: x_i must differ from y_i");
    }

    Graph acc = graphs[0];
    int glue_at = anchors[0].second;  // image of y_1 in acc
    for (size_t i = 1; i < graphs.size(); ++i) {
        const auto& [x, y] = anchors[i];
        const int before = acc.order();
        acc = r_glue(acc, graphs[i], GlueSpec{{glue_at}, {x}});
        // non-clique vertices of graphs[i] were appended ascending
        glue_at = (y < x) ? before + y : before + y - 1;
    }
    return acc;
}

}  // namespace superdom
