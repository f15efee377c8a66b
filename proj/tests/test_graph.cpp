#include <doctest.h>

#include <random>
#include <set>

#include "dfreq/graph.hpp"

using namespace dfreq;

namespace {

const char* kExample = "7\n1 2\n2 3\n3 4\n3 5\n5 6\n6 7\n";

}  // namespace

TEST_CASE("edge_index is the lexicographic pair order") {
    CHECK(edge_index(4, 1, 2) == 0);
    CHECK(edge_index(4, 1, 4) == 2);
    CHECK(edge_index(4, 2, 3) == 3);
    CHECK(edge_index(4, 3, 4) == 5);
    CHECK(edge_index(4, 4, 3) == 5);
    CHECK_THROWS(edge_index(4, 2, 2));
    CHECK_THROWS(edge_index(4, 0, 2));

    for (int n = 2; n <= 8; ++n) {
        int expected = 0;
        for (Vertex u = 1; u <= n; ++u) {
            for (Vertex v = u + 1; v <= n; ++v) {
                CHECK(edge_index(n, u, v) == expected);
                CHECK(edge_at(n, expected) == std::pair<Vertex, Vertex>{u, v});
                ++expected;
            }
        }
        CHECK(expected == pair_count(n));
    }
}

TEST_CASE("adjacent on the 7-vertex example graph") {
    const OrderedGraph g = parse_graph(kExample);
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 6);
    CHECK(g.adjacent(3, 5));
    CHECK(g.adjacent(5, 3));
    CHECK_FALSE(g.adjacent(4, 5));
    for (Vertex t = 1; t <= 7; ++t) CHECK_FALSE(g.adjacent(t, t));
    CHECK_THROWS_AS(g.adjacent(0, 1), std::out_of_range);
    CHECK_THROWS_AS(g.adjacent(1, 8), std::out_of_range);
    CHECK_FALSE(complete_graph(3).adjacent(2, 2));
}

TEST_CASE("parse_graph") {
    CHECK(parse_graph("2\n") == empty_graph(2));
    CHECK(parse_graph("2\n2 1\n") == complete_graph(2));
    CHECK(parse_graph("2\n1 2\n") == complete_graph(2));
    CHECK(parse_graph("\n3\n\n1 3\n  \n") == OrderedGraph(3, EdgeMask{1} << edge_index(3, 1, 3)));
    CHECK(parse_graph("# header\n3  # vertices\n1 3 # edge\n#\n") == OrderedGraph(3, EdgeMask{1} << edge_index(3, 1, 3)));

    try {
        parse_graph("3\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("3\n1 2\n2 1\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_graph("3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("12\n"), ParseError);  // beyond mask capacity

    try {
        parse_graph("4\n1 2\n2 x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("parse_graph_json") {
    CHECK(parse_graph_json(R"({"n": 7, "edges": [[1,2],[2,3],[3,4],[3,5],[5,6],[6,7]]})") == parse_graph(kExample));
    CHECK(parse_graph_json(R"({"n": 3})") == empty_graph(3));
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 3, "edges": [[1,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 3, "edges": [[1,2],[2,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
}

TEST_CASE("render_graph is canonical and parse inverts it") {
    CHECK(render_graph(parse_graph("3\n3 1\n2 1\n")) == "3\n1 2\n1 3\n");
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % kMaxGraphVertices);
        const EdgeMask full = complete_graph(n).mask();
        const OrderedGraph g(n, rng() & full);
        CHECK(parse_graph(render_graph(g)) == g);
    }
}

TEST_CASE("complete and empty graphs") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(empty_graph(4).mask() == 0);
    CHECK(complete_graph(2) == parse_graph("2\n1 2\n"));
    CHECK(complete_graph(11).edge_count() == 55);
    CHECK_THROWS_AS(complete_graph(12), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(0), std::invalid_argument);
    CHECK_THROWS_AS(OrderedGraph(3, EdgeMask{1} << 3), std::invalid_argument);
}

TEST_CASE("enumerate_graphs") {
    CHECK(graph_count(2) == 2);
    CHECK(graph_count(4) == 64);
    CHECK(graph_count(7) == 2097152);

    std::set<EdgeMask> seen;
    EdgeMask prev = 0;
    bool ascending = true;
    for_each_graph(4, [&](const OrderedGraph& g) {
        if (!seen.empty()) ascending = ascending && g.mask() > prev;
        prev = g.mask();
        seen.insert(g.mask());
    });
    CHECK(seen.size() == 64);
    CHECK(ascending);

    std::size_t n7 = 0;
    for_each_graph(7, [&](const OrderedGraph&) { ++n7; });
    CHECK(n7 == 2097152);
}

TEST_CASE("partitioned enumeration covers the universe exactly once") {
    for (const int n : {1, 2, 3, 5}) {
        for (const int parts : {1, 2, 3, 7, 64, 2000}) {
            std::multiset<EdgeMask> seen;
            const auto ranges = partition_graphs(n, parts);
            for (std::size_t i = 1; i < ranges.size(); ++i) CHECK(ranges[i].first == ranges[i - 1].last);
            for (const auto& r : ranges) for_each_graph(n, r, [&](const OrderedGraph& g) { seen.insert(g.mask()); });
            CHECK(seen.size() == graph_count(n));
            CHECK(std::set<EdgeMask>(seen.begin(), seen.end()).size() == graph_count(n));
        }
    }
    CHECK_THROWS(partition_graphs(3, 0));
}

TEST_CASE("EdgeSet") {
    EdgeSet e(5);
    e.insert(3, 1);
    e.insert(1, 4);
    CHECK(e.size() == 2);
    CHECK(e.contains(1, 3));
    CHECK_FALSE(e.contains(1, 1));
    CHECK(e.edges() == std::vector<std::pair<Vertex, Vertex>>{{1, 3}, {1, 4}});
    EdgeSet f(5);
    f.insert(1, 3);
    CHECK(f.subset_of(e));
    CHECK(e.intersects(f));
    CHECK_FALSE(e.subset_of(f));
}
