#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "superdom/generators.hpp"
#include "superdom/graph.hpp"
#include "test_util.hpp"

using namespace superdom;

TEST_CASE("graph construction enforces the simple-graph invariants") {
    CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::out_of_range);

    Graph g(4, {{0, 1}, {1, 2}, {1, 0}});  // duplicate edge merged
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK(g.degree(1) == 2);

    Graph k1(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.size() == 0);
}

TEST_CASE("neighbourhood") {
    const Graph p3 = make_path(3);
    CHECK(neighbourhood(p3, 1).members() == std::vector<int>{0, 2});

    const Graph k4 = make_complete(4);
    CHECK(neighbourhood(k4, 0, true).members() == std::vector<int>{0, 1, 2, 3});

    const Graph c5 = make_cycle(5);
    CHECK(neighbourhood(c5, 0).members() == std::vector<int>{1, 4});

    CHECK_THROWS_AS(neighbourhood(p3, 3), std::out_of_range);
}

TEST_CASE("is_dominating") {
    const Graph c4 = make_cycle(4);
    VertexSet s(4);
    s.add(0);
    s.add(2);
    CHECK(is_dominating(c4, s));

    const Graph p4 = make_path(4);
    VertexSet t(4);
    t.add(0);
    CHECK_FALSE(is_dominating(p4, t));

    CHECK(is_dominating(p4, VertexSet::full(4)));
}

TEST_CASE("is_super_dominating and its witness") {
    const Graph c4 = make_cycle(4);
    VertexSet s(4);
    s.add(0);
    s.add(1);
    const auto wm = super_domination_witness(c4, s);
    REQUIRE(wm.has_value());
    CHECK(wm->entries ==
          std::vector<std::pair<int, int>>{{1, 2}, {0, 3}});  // sorted by u

    const Graph k3 = make_complete(3);
    VertexSet one(3);
    one.add(0);
    CHECK_FALSE(is_super_dominating(k3, one));

    const auto all = super_domination_witness(k3, VertexSet::full(3));
    REQUIRE(all.has_value());
    CHECK(all->entries.empty());
}

TEST_CASE("connected_components") {
    // P_2 + P_3 on 5 vertices
    const Graph g(5, {{0, 1}, {2, 3}, {3, 4}});
    const auto parts = connected_components(g);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].members() == std::vector<int>{0, 1});
    CHECK(parts[1].members() == std::vector<int>{2, 3, 4});

    CHECK(connected_components(make_cycle(5)).size() == 1);

    const Graph isolated(3, {});
    CHECK(connected_components(isolated).size() == 3);
}

TEST_CASE("classify_cycle") {
    CHECK(classify_cycle(make_cycle(8)) == 8);
    CHECK_FALSE(classify_cycle(make_path(4)).has_value());
    CHECK_FALSE(classify_cycle(make_complete(4)).has_value());
    // 2-regular but disconnected: two triangles
    const Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(classify_cycle(two).has_value());
}

TEST_CASE("set-lex ordering of vertex sets") {
    auto make = [](std::initializer_list<int> vs) {
        VertexSet s(6);
        for (int v : vs) s.add(v);
        return s;
    };
    CHECK(VertexSet::lex_less(make({0, 1}), make({0, 3})));
    CHECK(VertexSet::lex_less(make({0, 3}), make({1, 2})));
    CHECK(VertexSet::lex_less(make({1, 2}), make({2, 3})));
    CHECK_FALSE(VertexSet::lex_less(make({2, 3}), make({2, 3})));
}

TEST_CASE("super domination implies domination (random)") {
    std::mt19937 rng(20240601);
    int supers_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = testutil::random_graph(rng, n, 0.4);
        const VertexSet s = testutil::random_subset(rng, n, 0.6);
        if (is_super_dominating(g, s)) {
            ++supers_seen;
            CHECK(is_dominating(g, s));
        }
        // predicate agrees with the first-principles formulation
        CHECK(is_super_dominating(g, s) ==
              testutil::naive_is_super_dominating(g, testutil::to_std_set(s)));
    }
    CHECK(supers_seen > 0);
}

TEST_CASE("witness maps are injective and cover the complement") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = testutil::random_graph(rng, n, 0.5);
        const VertexSet s = testutil::random_subset(rng, n, 0.6);
        const auto wm = super_domination_witness(g, s);
        if (!wm) continue;
        std::set<int> vs, us;
        for (const auto& [v, u] : wm->entries) {
            CHECK(s.contains(v));
            CHECK_FALSE(s.contains(u));
            // exact witness condition
            const VertexSet reach = g.row(v) & s.complement();
            CHECK(reach.count() == 1);
            CHECK(reach.contains(u));
            vs.insert(v);
            us.insert(u);
        }
        CHECK(vs.size() == wm->entries.size());  // each v at most once
        CHECK(us.size() == wm->entries.size());
        CHECK(static_cast<int>(us.size()) == s.complement().count());
    }
}

TEST_CASE("the full vertex set is always super dominating") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = testutil::random_graph(rng, n, 0.3);
        CHECK(is_super_dominating(g, g.vertices()));
    }
}

TEST_CASE("relabelling preserves the predicate") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = testutil::random_graph(rng, n, 0.5);
        const VertexSet s = testutil::random_subset(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph pg = testutil::permute_graph(g, perm);
        const VertexSet ps = testutil::permute_set(s, perm);
        CHECK(is_super_dominating(g, s) == is_super_dominating(pg, ps));
    }
}
