#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "superdom/generators.hpp"
#include "superdom/graph_io.hpp"
#include "test_util.hpp"

using namespace superdom;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace

TEST_CASE("parsing well-formed files") {
    const Graph g = parse("# a triangle\nn 3\ne 0 1\ne 1 2\n\ne 0 2\n");
    CHECK(g == make_cycle(3));

    const Graph k1 = parse("n 1\n");
    CHECK(k1.order() == 1);

    // CRLF tolerated
    const Graph crlf = parse("n 2\r\ne 0 1\r\n");
    CHECK(crlf == make_path(2));
}

TEST_CASE("parse errors carry a line diagnostic") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("e 0 1\n"), ParseError);          // edge before n
    CHECK_THROWS_AS(parse("n 2\nn 2\n"), ParseError);       // duplicate header
    CHECK_THROWS_AS(parse("n 0\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\ne 0 0\n"), ParseError);     // self-loop
    CHECK_THROWS_AS(parse("n 3\ne 0 3\n"), ParseError);     // out of range
    CHECK_THROWS_AS(parse("n 3\ne 0 1\ne 1 0\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse("n 3\nv 0 1\n"), ParseError);     // unknown tag
    CHECK_THROWS_AS(parse("n 3\ne 0 1 junk\n"), ParseError);
    CHECK_THROWS_AS(parse("n 3\ne 0\n"), ParseError);

    try {
        parse("n 3\ne 0 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("serialization is canonical and round-trips") {
    CHECK(graph_to_string(make_path(3)) == "n 3\ne 0 1\ne 1 2\n");

    const std::string canon = "n 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n";
    CHECK(graph_to_string(parse(canon)) == canon);

    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testutil::random_graph(rng, 1 + rng() % 12, 0.4);
        const Graph back = parse(graph_to_string(g));
        CHECK(back == g);
        CHECK(graph_to_string(back) == graph_to_string(g));
    }
}
