#pragma once

// Immutable simple-graph core: bitset adjacency rows, vertex subsets,
// the super-domination predicate and small structural utilities.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superdom {

// Hard construction limit; keeps row widths sane. Exact search has its own,
// much smaller, practical limits (see solver.hpp).
inline constexpr int kMaxVertices = 1024;

// Subset of the vertices 0..n-1 of some graph, stored as a bitset.
class VertexSet {
public:
    VertexSet() : universe_(0) {}
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0 || universe > kMaxVertices)
            throw std::invalid_argument("VertexSet: universe out of range");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int w = 0; w < static_cast<int>(s.words_.size()); ++w)
            s.words_[w] = ~0ULL;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1ULL;
    }
    void add(int v) {
        check(v);
        words_[v >> 6] |= 1ULL << (v & 63);
    }
    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(1ULL << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // -1 when no member exists (at or after `from`).
    int first() const { return next_from(0); }
    int next(int after) const { return next_from(after + 1); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    VertexSet operator&(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    VertexSet operator|(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    // this minus o
    VertexSet minus(const VertexSet& o) const {
        check_same(o);
        VertexSet r(universe_);
        for (size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }
    VertexSet complement() const {
        VertexSet r(universe_);
        for (size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Order by sorted member sequence ("set-lex"): the set owning the
    // smallest differing vertex comes first.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        a.check_same(b);
        for (size_t i = 0; i < a.words_.size(); ++i) {
            uint64_t diff = a.words_[i] ^ b.words_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return (a.words_[i] & low) != 0;
            }
        }
        return false;
    }

    // Low 64 bits; only meaningful when universe <= 64.
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe of size " +
                                    std::to_string(universe_));
    }
    void trim() {
        int rem = universe_ & 63;
        if (rem && !words_.empty()) words_.back() &= (1ULL << rem) - 1;
    }
    int next_from(int v) const {
        if (v < 0) v = 0;
        while (v < universe_) {
            uint64_t w = words_[v >> 6] >> (v & 63);
            if (w) return v + __builtin_ctzll(w);
            v = (v & ~63) + 64;
        }
        return -1;
    }
    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int universe_;
    std::vector<uint64_t> words_;
};

using Edge = std::pair<int, int>;

// Finite undirected simple graph on vertices 0..n-1. Immutable after
// construction; duplicate edges in the input list are merged.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& edges) : n_(n) {
        if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
        if (n > kMaxVertices)
            throw std::invalid_argument("Graph: order exceeds kMaxVertices");
        rows_.assign(n, VertexSet(n));
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::out_of_range("Graph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop rejected");
            rows_[u].add(v);
            rows_[v].add(u);
        }
        m_ = 0;
        for (const auto& r : rows_) m_ += r.count();
        m_ /= 2;
    }

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const { return rows_.at(u).contains(v); }
    int degree(int v) const { return rows_.at(v).count(); }

    // Open neighbourhood N(v) as a set; do not mutate through it.
    const VertexSet& row(int v) const { return rows_.at(v); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next(u); v >= 0; v = rows_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && rows_ == o.rows_;
    }

private:
    int n_;
    int m_;
    std::vector<VertexSet> rows_;
};

inline VertexSet neighbourhood(const Graph& g, int v, bool closed = false) {
    if (v < 0 || v >= g.order())
        throw std::out_of_range("neighbourhood: vertex out of range");
    VertexSet s = g.row(v);
    if (closed) s.add(v);
    return s;
}

inline bool is_dominating(const Graph& g, const VertexSet& s) {
    for (int u = 0; u < g.order(); ++u) {
        if (s.contains(u)) continue;
        if (!g.row(u).intersects(s)) return false;
    }
    return true;
}

// For each super-dominated u in the complement of S, the entry (v, u) records
// the witness v in S with N(v) \cap complement(S) = {u}. Entries are sorted
// by u; v is the smallest qualifying index.
struct WitnessMap {
    std::vector<std::pair<int, int>> entries;  // (v in S, u outside S)
};

// Witness for the whole complement, or nullopt when S is not super dominating.
inline std::optional<WitnessMap> super_domination_witness(const Graph& g,
                                                          const VertexSet& s) {
    WitnessMap wm;
    const VertexSet outside = s.complement();
    for (int u = outside.first(); u >= 0; u = outside.next(u)) {
        const VertexSet candidates = g.row(u) & s;
        int found = -1;
        for (int v = candidates.first(); v >= 0; v = candidates.next(v)) {
            const VertexSet reach = g.row(v) & outside;
            if (reach.count() == 1) {  // reach == {u} since u is in it
                found = v;
                break;
            }
        }
        if (found < 0) return std::nullopt;
        wm.entries.emplace_back(found, u);
    }
    return wm;
}

inline bool is_super_dominating(const Graph& g, const VertexSet& s) {
    return super_domination_witness(g, s).has_value();
}

// Maximal connected parts, each sorted by construction, ordered by smallest
// member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> parts;
    std::vector<bool> seen(g.order(), false);
    for (int start = 0; start < g.order(); ++start) {
        if (seen[start]) continue;
        VertexSet part(g.order());
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            part.add(v);
            const VertexSet& nb = g.row(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        parts.push_back(std::move(part));
    }
    return parts;
}

// n iff g is a single cycle (connected and 2-regular), else nullopt.
inline std::optional<int> classify_cycle(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return std::nullopt;
    if (connected_components(g).size() != 1) return std::nullopt;
    return g.order();
}

// Induced subgraph on `part`, vertices relabelled to 0..|part|-1 in
// increasing original index. Returns the graph and the original labels.
inline std::pair<Graph, std::vector<int>> induced_subgraph(
    const Graph& g, const VertexSet& part) {
    std::vector<int> label = part.members();
    if (label.empty())
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < label.size(); ++i) local[label[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (size_t i = 0; i < label.size(); ++i) {
        const VertexSet nb = g.row(label[i]) & part;
        for (int w = nb.first(); w >= 0; w = nb.next(w))
            if (label[i] < w) edges.emplace_back(static_cast<int>(i), local[w]);
    }
    return {Graph(static_cast<int>(label.size()), edges), std::move(label)};
}

}  // namespace superdom
