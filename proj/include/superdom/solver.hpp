#pragma once

// Exact computation of domination and super domination numbers, enumeration
// and counting of minimum super dominating sets, and the replacement
// decomposition (S', D, f) of a super dominating set.
//
// Search strategy: per connected component, target sizes k grow from the
// ceil(c/2) floor; for each k, k-subsets are scanned as in/out decisions in
// set-lex order, abandoning a branch as soon as some excluded vertex can no
// longer acquire a private witness. The first leaf reached is therefore the
// lexicographically smallest witness. Counting uses a flat rank-partitioned
// scan instead, so parallel block counts are exact and order-independent.

#include <cstdint>
#include <thread>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

// Subset scans are O(C(n, n/2)); past this order they need an explicit nod.
inline constexpr int kCountGuard = 28;
// Single-word adjacency rows; exact search beyond this is hopeless anyway.
inline constexpr int kSearchLimit = 64;

struct SolveResult {
    int value = 0;
    VertexSet witness;
};

namespace detail {

inline uint64_t full_mask(int n) {
    return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

inline std::vector<uint64_t> adjacency_words(const Graph& g) {
    if (g.order() > kSearchLimit)
        throw std::runtime_error(
            "exact search supports at most 64 vertices per component");
    std::vector<uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row(v).low_word();
    return rows;
}

// Excluded vertex u can still be super dominated: some neighbour outside the
// excluded set has u as its only excluded neighbour so far. Exclusions only
// grow along a search branch, so a dead vertex stays dead.
inline bool excluded_vertex_alive(const std::vector<uint64_t>& adj, int u,
                                  uint64_t excluded) {
    uint64_t cand = adj[u] & ~excluded;
    while (cand) {
        const int v = __builtin_ctzll(cand);
        cand &= cand - 1;
        if (__builtin_popcountll(adj[v] & excluded) == 1) return true;
    }
    return false;
}

inline bool all_excluded_alive(const std::vector<uint64_t>& adj,
                               uint64_t excluded) {
    uint64_t t = excluded;
    while (t) {
        const int u = __builtin_ctzll(t);
        t &= t - 1;
        if (!excluded_vertex_alive(adj, u, excluded)) return false;
    }
    return true;
}

// Full predicate on a complete selection; used by the flat counting scan.
inline bool super_dominating_mask(const std::vector<uint64_t>& adj,
                                  uint64_t full, uint64_t s_mask) {
    uint64_t t = full & ~s_mask;
    uint64_t rest = t;
    while (rest) {
        const int u = __builtin_ctzll(rest);
        rest &= rest - 1;
        uint64_t cand = adj[u] & s_mask;
        bool found = false;
        while (cand) {
            const int v = __builtin_ctzll(cand);
            cand &= cand - 1;
            if (__builtin_popcountll(adj[v] & t) == 1) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// In/out scan over exact-k selections in set-lex order with the liveness
// prune. find_first stops at the first feasible leaf (the lex-min set);
// collect gathers every feasible selection, already sorted.
struct SubsetScan {
    const std::vector<uint64_t>& adj;
    int n;
    int k;
    uint64_t excluded = 0;

    bool find_first(int v, int in_count) {
        if (v == n) return true;  // branch guards force in_count == k here
        if (in_count < k && find_first(v + 1, in_count + 1)) return true;
        if (v - in_count < n - k) {
            excluded |= 1ULL << v;
            if (all_excluded_alive(adj, excluded) &&
                find_first(v + 1, in_count))
                return true;
            excluded &= ~(1ULL << v);
        }
        return false;
    }

    void collect(int v, int in_count, std::vector<uint64_t>& out) {
        if (v == n) {
            out.push_back(full_mask(n) & ~excluded);
            return;
        }
        if (in_count < k) collect(v + 1, in_count + 1, out);
        if (v - in_count < n - k) {
            excluded |= 1ULL << v;
            if (all_excluded_alive(adj, excluded)) collect(v + 1, in_count, out);
            excluded &= ~(1ULL << v);
        }
    }
};

// Pascal's triangle up to 64; every entry fits in uint64_t.
inline uint64_t binomial(int n, int k) {
    static const auto table = [] {
        std::vector<std::vector<uint64_t>> t(65, std::vector<uint64_t>(65, 0));
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

// k-subset with the given rank in increasing-numeric-mask (colex) order.
inline uint64_t unrank_colex(uint64_t rank, int k, int n) {
    uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int p = i - 1;
        while (p + 1 < n && binomial(p + 1, i) <= rank) ++p;
        mask |= 1ULL << p;
        rank -= binomial(p, i);
    }
    return mask;
}

inline uint64_t next_same_popcount(uint64_t v) {
    const uint64_t c = v & (~v + 1);
    const uint64_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace detail

// Minimum dominating set, with the lexicographically smallest witness.
// Isolated vertices can only be dominated by themselves and end up in S.
inline SolveResult domination_number(const Graph& g) {
    const int n = g.order();
    const auto adj = detail::adjacency_words(g);
    std::vector<uint64_t> closed(n);
    int max_closed = 0;
    for (int v = 0; v < n; ++v) {
        closed[v] = adj[v] | (1ULL << v);
        max_closed = std::max(max_closed, __builtin_popcountll(closed[v]));
    }
    // suffix_reach[v]: vertices still coverable by some w >= v
    std::vector<uint64_t> suffix_reach(n + 1, 0);
    for (int v = n - 1; v >= 0; --v)
        suffix_reach[v] = suffix_reach[v + 1] | closed[v];
    const uint64_t full = detail::full_mask(n);

    int k_min = (n + max_closed - 1) / max_closed;
    for (int k = k_min; k <= n; ++k) {
        uint64_t s_mask = 0, covered = 0;
        auto rec = [&](auto&& self, int v, int in_count) -> bool {
            if ((covered | suffix_reach[v]) != full) return false;
            if (v == n) return covered == full;
            if (in_count < k) {
                s_mask |= 1ULL << v;
                const uint64_t saved = covered;
                covered |= closed[v];
                if (self(self, v + 1, in_count + 1)) return true;
                covered = saved;
                s_mask &= ~(1ULL << v);
            }
            if (v - in_count < n - k && self(self, v + 1, in_count)) return true;
            return false;
        };
        if (rec(rec, 0, 0)) {
            SolveResult res{k, VertexSet(n)};
            for (int v = 0; v < n; ++v)
                if ((s_mask >> v) & 1) res.witness.add(v);
            return res;
        }
    }
    throw std::logic_error("domination_number: search exhausted");  // n in S always works
}

// Minimum super dominating set. Decomposes into connected components (the
// value is additive over them) and searches each one from the ceil(c/2)
// floor; an isolated vertex is forced into S. The assembled witness is the
// lexicographically smallest one overall.
inline SolveResult super_domination_number(const Graph& g) {
    SolveResult res{0, VertexSet(g.order())};
    for (const auto& comp : connected_components(g)) {
        const int c = comp.count();
        if (c == 1) {
            res.value += 1;
            res.witness.add(comp.first());
            continue;
        }
        auto [sub, labels] = induced_subgraph(g, comp);
        const auto adj = detail::adjacency_words(sub);
        bool solved = false;
        for (int k = (c + 1) / 2; k <= c && !solved; ++k) {
            detail::SubsetScan scan{adj, c, k};
            if (scan.find_first(0, 0)) {
                const uint64_t s_mask = detail::full_mask(c) & ~scan.excluded;
                for (int v = 0; v < c; ++v)
                    if ((s_mask >> v) & 1) res.witness.add(labels[v]);
                res.value += k;
                solved = true;
            }
        }
        if (!solved)  // cannot happen: S = V is always super dominating
            throw std::logic_error("super_domination_number: search exhausted");
    }
    return res;
}

namespace detail {

inline void check_count_guard(const Graph& g, bool override_guard) {
    if (g.order() > kSearchLimit)
        throw std::runtime_error(
            "enumeration/counting supports at most 64 vertices");
    if (g.order() > kCountGuard && !override_guard)
        throw std::runtime_error(
            "order " + std::to_string(g.order()) + " exceeds the counting guard (" +
            std::to_string(kCountGuard) + "); pass the override to proceed");
}

}  // namespace detail

// Every minimum super dominating set, in set-lex order.
inline std::vector<VertexSet> enumerate_min_super_dom(const Graph& g,
                                                      bool override_guard = false) {
    detail::check_count_guard(g, override_guard);
    const int n = g.order();
    const int k = super_domination_number(g).value;
    const auto adj = detail::adjacency_words(g);
    std::vector<uint64_t> masks;
    detail::SubsetScan scan{adj, n, k};
    scan.collect(0, 0, masks);
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (uint64_t m : masks) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((m >> v) & 1) s.add(v);
        out.push_back(std::move(s));
    }
    return out;
}

// |enumerate_min_super_dom(g)| without materializing the sets. The rank space
// of k-subsets is split into `threads` contiguous blocks; block counts are
// summed, so the result cannot depend on the block count.
inline uint64_t count_min_super_dom(const Graph& g, int threads = 1,
                                    bool override_guard = false) {
    detail::check_count_guard(g, override_guard);
    const int n = g.order();
    const int k = super_domination_number(g).value;
    if (k == n) return 1;
    const auto adj = detail::adjacency_words(g);
    const uint64_t full = detail::full_mask(n);
    const uint64_t total = detail::binomial(n, k);

    int blocks = std::max(1, threads);
    if (static_cast<uint64_t>(blocks) > total) blocks = static_cast<int>(total);

    std::vector<uint64_t> partial(blocks, 0);
    auto run_block = [&](int b) {
        const uint64_t lo = total / blocks * b + std::min<uint64_t>(total % blocks, b);
        const uint64_t hi =
            total / blocks * (b + 1) + std::min<uint64_t>(total % blocks, b + 1);
        uint64_t mask = detail::unrank_colex(lo, k, n);
        uint64_t cnt = 0;
        for (uint64_t r = lo; r < hi; ++r) {
            if (detail::super_dominating_mask(adj, full, mask)) ++cnt;
            if (r + 1 < hi) mask = detail::next_same_popcount(mask);
        }
        partial[b] = cnt;
    };

    if (blocks == 1) {
        run_block(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(blocks);
        for (int b = 0; b < blocks; ++b) pool.emplace_back(run_block, b);
        for (auto& t : pool) t.join();
    }
    uint64_t sum = 0;
    for (uint64_t c : partial) sum += c;
    return sum;
}

// The (S', D, f) decomposition of a super dominating set: for every excluded
// vertex b, the smallest a in S with N(a) inter complement(S) = {b} moves
// out in favour of b. S' = (S \ A) u complement(S) is again super dominating
// with |S'| = |S|.
struct PartitionDecomposition {
    VertexSet s_prime;
    VertexSet d;                            // S inter S'
    std::vector<std::pair<int, int>> f;     // (a, b): a in comp(S'), b in comp(S)
};

inline PartitionDecomposition partition_decomposition(const Graph& g,
                                                      const VertexSet& s) {
    const auto witness = super_domination_witness(g, s);
    if (!witness)
        throw std::invalid_argument(
            "partition_decomposition: set is not super dominating");
    VertexSet replaced(g.order());
    std::vector<std::pair<int, int>> f;
    f.reserve(witness->entries.size());
    for (const auto& [a, b] : witness->entries) {
        replaced.add(a);
        f.emplace_back(a, b);
    }
    std::sort(f.begin(), f.end());
    PartitionDecomposition out;
    out.s_prime = s.minus(replaced) | s.complement();
    out.d = s.minus(replaced);
    out.f = std::move(f);
    return out;
}

}  // namespace superdom
