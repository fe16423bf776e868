#include <catch2/catch_amalgamated.hpp>

#include "superdom/formulas.hpp"
#include "superdom/generators.hpp"
#include "superdom/products.hpp"
#include "superdom/solver.hpp"
#include "test_util.hpp"

using namespace superdom;

TEST_CASE("gamma_sp closed forms") {
    CHECK(gamma_sp_formula(GraphClass::Path, {5}) == 3);
    CHECK(gamma_sp_formula(GraphClass::Path, {1}) == 1);
    CHECK(gamma_sp_formula(GraphClass::Cycle, {6}) == 4);
    CHECK(gamma_sp_formula(GraphClass::Cycle, {10}) == 6);
    CHECK(gamma_sp_formula(GraphClass::Cycle, {8}) == 4);
    CHECK(gamma_sp_formula(GraphClass::Cycle, {7}) == 4);
    CHECK(gamma_sp_formula(GraphClass::Complete, {5}) == 4);
    CHECK(gamma_sp_formula(GraphClass::CompleteBipartite, {2, 3}) == 3);
    CHECK(gamma_sp_formula(GraphClass::Star, {6}) == 6);
    CHECK(gamma_sp_formula(GraphClass::Friendship, {4}) == 5);

    CHECK_THROWS_AS(gamma_sp_formula(GraphClass::Complete, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gamma_sp_formula(GraphClass::CompleteBipartite, {1, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(gamma_sp_formula(GraphClass::Cycle, {2}),
                    std::invalid_argument);
}

TEST_CASE("N_sp closed forms") {
    CHECK(nsp_formula(GraphClass::Cycle, {6}) == 15);
    CHECK(nsp_formula(GraphClass::Cycle, {10}) == 50);
    CHECK(nsp_formula(GraphClass::Cycle, {12}) == 4);
    CHECK(nsp_formula(GraphClass::Cycle, {9}) == 18);
    CHECK(nsp_formula(GraphClass::Cycle, {11}) == 11);
    CHECK(nsp_formula(GraphClass::Cycle, {3}) == 3);
    CHECK(nsp_formula(GraphClass::Path, {8}) == 2);
    CHECK(nsp_formula(GraphClass::Path, {7}) == 9);
    CHECK(nsp_formula(GraphClass::Path, {3}) == 3);
    CHECK(nsp_formula(GraphClass::Path, {1}) == 1);
    CHECK(nsp_formula(GraphClass::Complete, {7}) == 7);
    CHECK(nsp_formula(GraphClass::CompleteBipartite, {3, 3}) == 9);
    CHECK(nsp_formula(GraphClass::Star, {6}) == 7);
    CHECK(nsp_formula(GraphClass::Friendship, {3}) == 8);
    CHECK(nsp_formula(GraphClass::Friendship, {10}) == 1024);
    // F_1 is the triangle, so it counts like K_3
    CHECK(nsp_formula(GraphClass::Friendship, {1}) ==
          nsp_formula(GraphClass::Complete, {3}));

    CHECK_THROWS_AS(nsp_formula(GraphClass::Complete, {1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(nsp_formula(GraphClass::CompleteBipartite, {1, 2}),
                    std::invalid_argument);
}

TEST_CASE("formulas agree with the solver on small ranges") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(gamma_sp_formula(GraphClass::Path, {n}) ==
              super_domination_number(make_path(n)).value);
        CHECK(nsp_formula(GraphClass::Path, {n}) ==
              count_min_super_dom(make_path(n)));
    }
    for (int n = 3; n <= 10; ++n) {
        CHECK(gamma_sp_formula(GraphClass::Cycle, {n}) ==
              super_domination_number(make_cycle(n)).value);
        CHECK(nsp_formula(GraphClass::Cycle, {n}) ==
              count_min_super_dom(make_cycle(n)));
    }
    for (int n = 2; n <= 7; ++n) {
        CHECK(gamma_sp_formula(GraphClass::Complete, {n}) ==
              super_domination_number(make_complete(n)).value);
        CHECK(nsp_formula(GraphClass::Complete, {n}) ==
              count_min_super_dom(make_complete(n)));
    }
    for (int n = 2; n <= 4; ++n)
        for (int m = 2; m <= 4; ++m) {
            CHECK(gamma_sp_formula(GraphClass::CompleteBipartite, {n, m}) ==
                  super_domination_number(make_complete_bipartite(n, m)).value);
            CHECK(nsp_formula(GraphClass::CompleteBipartite, {n, m}) ==
                  count_min_super_dom(make_complete_bipartite(n, m)));
        }
    for (int n = 1; n <= 7; ++n) {
        CHECK(gamma_sp_formula(GraphClass::Star, {n}) ==
              super_domination_number(make_star(n)).value);
        CHECK(nsp_formula(GraphClass::Star, {n}) ==
              count_min_super_dom(make_star(n)));
    }
    for (int n = 1; n <= 3; ++n) {
        CHECK(gamma_sp_formula(GraphClass::Friendship, {n}) ==
              super_domination_number(make_friendship(n)).value);
        CHECK(nsp_formula(GraphClass::Friendship, {n}) ==
              count_min_super_dom(make_friendship(n)));
    }
}

TEST_CASE("neighbourhood corona value and hypotheses") {
    CHECK(ncorona_value(4, 2) == 12);
    CHECK(ncorona_value(3, 2) == 9);
    for (int n = 1; n <= 6; ++n) CHECK(ncorona_value(n, n + 1) == n * n + 2 * n);

    CHECK(ncorona_hypotheses(make_cycle(4), make_complete(3)));
    CHECK(ncorona_hypotheses(make_path(2), make_complete(2)));
    CHECK(ncorona_hypotheses(make_path(3), make_cycle(4)));  // gamma_sp = 2 < 3

    // paw: K_3 plus a pendant; gamma_sp = 3 = m - 1 and it is not complete
    const Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    CHECK(super_domination_number(paw).value == 3);
    CHECK_FALSE(ncorona_hypotheses(make_path(3), paw));
    CHECK_FALSE(ncorona_hypotheses(make_path(3), make_path(1)));  // H = K_1
    CHECK_FALSE(ncorona_hypotheses(disjoint_union(make_path(2), make_path(2)),
                                   make_complete(3)));  // G disconnected

    CHECK(ncorona_trivial_upper(2, 4, 3) == 14);
    CHECK(ncorona_trivial_upper(2, 3, 4) == 14);
    CHECK(ncorona_trivial_upper(5, 7, 0) == 5);
}

TEST_CASE("bound intervals") {
    const auto g1 = glue_bounds(4, 4, 4);
    CHECK(g1.lo == 4);
    CHECK(g1.hi == 8);
    const auto g2 = glue_bounds(8, 8, 4);
    CHECK(g2.lo == 12);
    CHECK(g2.hi == 16);
    const auto g0 = glue_bounds(3, 5, 0);
    CHECK(g0.lo == g0.hi);
    CHECK_THROWS_AS(glue_bounds(1, 1, -1), std::invalid_argument);

    const auto h1 = hajos_bounds(4, 2);
    CHECK(h1.lo == 4);
    CHECK(h1.hi == 6);
    const auto h2 = hajos_bounds(1, 1);
    CHECK(h2.lo == 0);
    CHECK(h2.hi == 2);
    CHECK(h2.contains(1));
    CHECK_FALSE(h2.contains(3));

    const auto c = chain_bounds(3, 4);
    CHECK(c.lo == 6);
    CHECK(c.hi == 7);
}

namespace {

uint64_t necklaces(std::vector<int> q) {
    return necklace_count(NecklaceContent{std::move(q)});
}

}  // namespace

TEST_CASE("necklace identities") {
    CHECK(necklaces({3, 1}) == 1);
    CHECK(necklaces({4, 2}) == 3);
    CHECK(necklaces({3, 2}) == 2);
    CHECK(necklaces({1, 1, 1}) == 2);
    for (int k = 1; k <= 12; ++k) CHECK(necklaces({k, 1}) == 1);
    for (int k = 1; k <= 10; ++k)
        CHECK(necklaces({2 * k, 2}) == static_cast<uint64_t>(k) + 1);
    for (int k = 0; k <= 10; ++k)
        CHECK(necklaces({2 * k + 1, 2}) == static_cast<uint64_t>(k) + 1);
    // single bead type: one necklace
    for (int n = 1; n <= 12; ++n) CHECK(necklaces({n}) == 1);

    CHECK_THROWS_AS(necklaces({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(necklaces({}), std::invalid_argument);
}

TEST_CASE("necklace counter matches brute-force orbit counting") {
    // every composition of n into positive parts, n <= 8 (n <= 10 runs in the
    // acceptance suite)
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::vector<int>> stack{{}};
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            int sum = 0;
            for (int q : cur) sum += q;
            if (sum == n) {
                if (!cur.empty())
                    CHECK(necklaces(cur) == testutil::naive_necklace_count(cur));
                continue;
            }
            for (int next = 1; next + sum <= n; ++next) {
                auto ext = cur;
                ext.push_back(next);
                stack.push_back(ext);
            }
        }
    }
}
