#pragma once

// Closed forms for gamma_sp and N_sp on the supported graph classes, the
// neighbourhood-corona exact value and its hypothesis check, bound intervals
// for r-gluing / Hajos sums / chains, and the cyclic necklace counter.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "superdom/generators.hpp"
#include "superdom/graph.hpp"
#include "superdom/solver.hpp"

namespace superdom {

namespace detail {

[[noreturn]] inline void domain_error(const std::string& msg) {
    throw std::invalid_argument(msg);
}

}  // namespace detail

// Exact gamma_sp by class. Domains follow the stated theorems; K_1 and
// K_{1,m} are rejected under complete / complete_bipartite with a pointer to
// the class that covers them.
inline int gamma_sp_formula(GraphClass cls, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            detail::domain_error("gamma_sp_formula: wrong number of parameters");
    };
    switch (cls) {
        case GraphClass::Path: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("gamma_sp(P_n): n must be >= 1");
            return (n + 1) / 2;
        }
        case GraphClass::Cycle: {
            want(1);
            const int n = params[0];
            if (n < 3) detail::domain_error("gamma_sp(C_n): n must be >= 3");
            if (n % 4 == 2) return (n + 1 + 1) / 2;  // ceil((n+1)/2)
            return (n + 1) / 2;
        }
        case GraphClass::Complete: {
            want(1);
            const int n = params[0];
            if (n < 2)
                detail::domain_error(
                    "gamma_sp(K_n): theorem needs n >= 2 (K_1 is path 1)");
            return n - 1;
        }
        case GraphClass::CompleteBipartite: {
            want(2);
            const int n = params[0], m = params[1];
            if (std::min(n, m) < 2)
                detail::domain_error(
                    "gamma_sp(K_{n,m}): theorem needs min(n,m) >= 2 "
                    "(K_{1,m} is star m)");
            return n + m - 2;
        }
        case GraphClass::Star: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("gamma_sp(K_{1,n}): n must be >= 1");
            return n;
        }
        case GraphClass::Friendship: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("gamma_sp(F_n): n must be >= 1");
            return n + 1;
        }
    }
    throw std::logic_error("gamma_sp_formula: unreachable");
}

// Exact count of minimum super dominating sets by class.
inline uint64_t nsp_formula(GraphClass cls, const std::vector<int>& params) {
    auto want = [&](size_t k) {
        if (params.size() != k)
            detail::domain_error("nsp_formula: wrong number of parameters");
    };
    switch (cls) {
        case GraphClass::Path: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("N_sp(P_n): n must be >= 1");
            if (n == 1) return 1;
            if (n % 2 == 0) return 2;
            return static_cast<uint64_t>(3) * (n - 1) / 2;
        }
        case GraphClass::Cycle: {
            want(1);
            const uint64_t n = params[0] < 0 ? 0 : params[0];
            if (n < 3) detail::domain_error("N_sp(C_n): n must be >= 3");
            switch (n % 4) {
                case 0: return 4;
                case 1: return 2 * n;
                case 2: return (5 * n * n - 10 * n) / 8;
                default: return n;
            }
        }
        case GraphClass::Complete: {
            want(1);
            const int n = params[0];
            if (n < 2)
                detail::domain_error(
                    "N_sp(K_n): theorem needs n >= 2 (K_1 is path 1)");
            return static_cast<uint64_t>(n);
        }
        case GraphClass::CompleteBipartite: {
            want(2);
            const int n = params[0], m = params[1];
            if (std::min(n, m) < 2)
                detail::domain_error(
                    "N_sp(K_{n,m}): theorem needs min(n,m) >= 2 "
                    "(K_{1,m} is star m)");
            return static_cast<uint64_t>(n) * m;
        }
        case GraphClass::Star: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("N_sp(K_{1,n}): n must be >= 1");
            return static_cast<uint64_t>(n) + 1;
        }
        case GraphClass::Friendship: {
            want(1);
            const int n = params[0];
            if (n < 1) detail::domain_error("N_sp(F_n): n must be >= 1");
            if (n > 63) detail::domain_error("N_sp(F_n): 2^n overflows");
            // F_1 is the triangle: any of its three pairs works, so the
            // 2^n count (whose centre-is-forced argument needs n >= 2)
            // does not apply there.
            if (n == 1) return 3;
            return uint64_t{1} << n;
        }
    }
    throw std::logic_error("nsp_formula: unreachable");
}

// gamma_sp(G * H) = n_G * (gamma_sp(H) + 1) under the hypotheses checked by
// ncorona_hypotheses. Pure arithmetic; callers assert the hypotheses.
inline long long ncorona_value(int n_g, int gamma_sp_h) {
    return static_cast<long long>(n_g) * (gamma_sp_h + 1);
}

// The hypotheses of the exact value: G, H connected, |V(H)| != 1, and
// gamma_sp(H) < |V(H)| - 1 or H complete. Solves H exactly.
inline bool ncorona_hypotheses(const Graph& g, const Graph& h) {
    if (connected_components(g).size() != 1) return false;
    if (connected_components(h).size() != 1) return false;
    const int m = h.order();
    if (m == 1) return false;
    if (2 * h.size() == m * (m - 1)) return true;  // H complete
    return super_domination_number(h).value < m - 1;
}

// The always-valid bound gamma_sp(G * H) <= gamma_sp(G) + n*m.
inline long long ncorona_trivial_upper(int gamma_sp_g, int n, int m) {
    return static_cast<long long>(gamma_sp_g) + static_cast<long long>(n) * m;
}

struct BoundInterval {
    int lo = 0;
    int hi = 0;
    std::string source;

    bool contains(int value) const { return lo <= value && value <= hi; }
};

// gamma_sp(G1) + gamma_sp(G2) - r <= gamma_sp(G1 u_{K_r} G2) <= sum.
inline BoundInterval glue_bounds(int gsp1, int gsp2, int r) {
    if (r < 0) detail::domain_error("glue_bounds: r must be >= 0");
    return {gsp1 + gsp2 - r, gsp1 + gsp2, "r-glue"};
}

// gamma_sp(G1) + gamma_sp(G2) - 2 <= gamma_sp(Hajos sum) <= sum.
inline BoundInterval hajos_bounds(int gsp1, int gsp2) {
    return {gsp1 + gsp2 - 2, gsp1 + gsp2, "hajos"};
}

// Two-graph chain: sum - 1 <= gamma_sp(C(G1, G2)) <= sum.
inline BoundInterval chain_bounds(int gsp1, int gsp2) {
    return {gsp1 + gsp2 - 1, gsp1 + gsp2, "chain"};
}

// n beads in a cycle, q_i of type i; counted up to rotation.
struct NecklaceContent {
    int n = 0;
    std::vector<int> q;

    NecklaceContent(std::vector<int> counts) : q(std::move(counts)) {
        if (q.empty())
            detail::domain_error("NecklaceContent: need at least one type");
        long long sum = 0;
        for (int c : q) {
            if (c < 1) detail::domain_error("NecklaceContent: counts must be >= 1");
            sum += c;
        }
        if (sum > 64)
            detail::domain_error("NecklaceContent: at most 64 beads supported");
        n = static_cast<int>(sum);
    }
};

namespace detail {

inline int euler_phi(int d) {
    int result = d;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            result -= result / p;
        }
    }
    if (d > 1) result -= result / d;
    return result;
}

inline unsigned __int128 multinomial128(int n, const std::vector<int>& parts) {
    unsigned __int128 acc = 1;
    int rest = n;
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    for (int p : parts) {
        const uint64_t b = binomial(rest, p);
        if (b != 0 && acc > kMax / b)
            throw std::overflow_error("necklace_count: multinomial overflow");
        acc *= b;
        rest -= p;
    }
    return acc;
}

}  // namespace detail

// Orbits of bead arrangements under the rotation group of order n, via
// Burnside: (1/n) * sum over d | gcd(q_1..q_k) of phi(d) * (n/d)! / prod (q_i/d)!.
inline uint64_t necklace_count(const NecklaceContent& content) {
    int g = 0;
    for (int q : content.q) g = std::gcd(g, q);
    unsigned __int128 sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d != 0) continue;
        std::vector<int> scaled;
        scaled.reserve(content.q.size());
        for (int q : content.q) scaled.push_back(q / d);
        const unsigned __int128 term =
            static_cast<unsigned __int128>(detail::euler_phi(d)) *
            detail::multinomial128(content.n / d, scaled);
        if (sum > ~static_cast<unsigned __int128>(0) - term)
            throw std::overflow_error("necklace_count: overflow");
        sum += term;
    }
    const unsigned __int128 orbits = sum / content.n;
    if (orbits > UINT64_MAX)
        throw std::overflow_error("necklace_count: result exceeds 64 bits");
    return static_cast<uint64_t>(orbits);
}

}  // namespace superdom
