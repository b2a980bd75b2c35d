#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "safenum/error.hpp"
#include "safenum/graph.hpp"
#include "safenum/vertex_set.hpp"

using namespace safenum;

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex sets sort, deduplicate and validate their members") {
    VertexSet s(6, {4, 1, 4, 0});
    CHECK(s.size() == 3);
    CHECK(s.members() == std::vector<int>{0, 1, 4});
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK_THROWS_AS(VertexSet(3, {3}), invalid_input_error);
    CHECK_THROWS_AS(VertexSet(3, {-1}), invalid_input_error);
    CHECK_THROWS_AS(VertexSet(-1), invalid_input_error);
}

TEST_CASE("vertex set algebra is exact") {
    VertexSet a(5, {0, 1, 2});
    VertexSet b(5, {2, 3});
    CHECK(a.set_union(b).members() == std::vector<int>{0, 1, 2, 3});
    CHECK(a.set_difference(b).members() == std::vector<int>{0, 1});
    CHECK(b.complement().members() == std::vector<int>{0, 1, 4});
    CHECK(a.intersects(b));
    CHECK_FALSE(VertexSet(5, {0}).intersects(VertexSet(5, {1})));
    CHECK(VertexSet(5, {1, 2}).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(VertexSet::full(3).members() == std::vector<int>{0, 1, 2});
    CHECK(VertexSet::full(3).complement().empty());
    CHECK_THROWS_AS(a.set_union(VertexSet(4, {0})), invalid_input_error);
}

TEST_CASE("graphs validate construction and edge insertion") {
    CHECK_THROWS_AS(Graph(0), invalid_input_error);
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(0, 1);  // duplicate insert is a no-op
    g.add_edge(1, 0);
    CHECK(g.num_edges() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK_THROWS_AS(g.add_edge(1, 1), invalid_input_error);
    CHECK_THROWS_AS(g.add_edge(0, 3), invalid_input_error);
    CHECK_THROWS_AS(g.has_edge(0, 3), invalid_input_error);
    CHECK_THROWS_AS(g.neighbors(-1), invalid_input_error);
    CHECK(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("generators produce the expected shapes") {
    Graph k4 = Graph::complete(4);
    CHECK(k4.num_edges() == 6);
    Graph p4 = Graph::path(4);
    CHECK(p4.num_edges() == 3);
    CHECK(p4.has_edge(1, 2));
    CHECK_FALSE(p4.has_edge(0, 3));
    Graph c5 = Graph::cycle(5);
    CHECK(c5.num_edges() == 5);
    CHECK(c5.has_edge(4, 0));
    CHECK_THROWS_AS(Graph::cycle(2), invalid_input_error);
    Graph s3 = Graph::star(3);
    CHECK(s3.order() == 4);
    CHECK(s3.num_edges() == 3);
    CHECK(s3.neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(Graph::star(0).order() == 1);
}

TEST_CASE("a triangle is a single component") {
    Graph g = Graph::complete(3);
    auto comps = components(g, VertexSet::full(3));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members() == std::vector<int>{0, 1, 2});
}

TEST_CASE("the two endpoints of a path induce two singleton components") {
    Graph g = Graph::path(4);
    auto comps = components(g, VertexSet(4, {0, 3}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].members() == std::vector<int>{0});
    CHECK(comps[1].members() == std::vector<int>{3});
}

TEST_CASE("a 2x2 block of cells in the 3x3 rook graph is one component of size 4") {
    // Cells {2,3} x {2,3}, flat indices {4, 5, 7, 8}; built from the
    // adjacency rule, not from the product module.
    Graph g = testutil::rook_by_rule(3, 3);
    auto comps = components(g, VertexSet(9, {4, 5, 7, 8}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members() == std::vector<int>{4, 5, 7, 8});
}

TEST_CASE("components of the empty set are none; connectivity of the empty set is false") {
    Graph g = Graph::path(3);
    CHECK(components(g, VertexSet(3)).empty());
    CHECK_FALSE(is_connected(g, VertexSet(3)));
}

TEST_CASE("induced connectivity queries") {
    Graph g = Graph::path(4);
    CHECK(is_connected(g, VertexSet(4, {0, 1})));
    CHECK_FALSE(is_connected(g, VertexSet(4, {0, 2})));
    CHECK(is_connected(g, VertexSet(4, {2})));
    CHECK(is_connected(g));
    Graph split(2);  // two isolated vertices
    CHECK_FALSE(is_connected(split));
    CHECK_THROWS_AS(components(g, VertexSet(5, {0})), invalid_input_error);
}

TEST_CASE("edge queries between disjoint sets") {
    Graph g = Graph::path(4);
    CHECK(has_edge_between(g, VertexSet(4, {0, 1}), VertexSet(4, {2})));
    CHECK_FALSE(has_edge_between(g, VertexSet(4, {0, 1}), VertexSet(4, {3})));
    CHECK_THROWS_AS(has_edge_between(g, VertexSet(4, {0, 1}), VertexSet(4, {1})),
                    invalid_input_error);

    // Corner cell vs the opposite 2x2 block of the 3x3 rook graph: no shared
    // row or column, hence no edge.
    Graph r = testutil::rook_by_rule(3, 3);
    CHECK_FALSE(has_edge_between(r, VertexSet(9, {0}), VertexSet(9, {4, 5, 7, 8})));
    CHECK(has_edge_between(r, VertexSet(9, {0}), VertexSet(9, {1, 4})));
}

TEST_CASE("components partition their input and are mutually unjoined") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 2, 14);
        VertexSet within = testutil::random_subset(rng, g.order(), 0.6, false);
        auto comps = components(g, within);

        std::vector<int> merged;
        int previous_min = -1;
        for (const auto& c : comps) {
            REQUIRE_FALSE(c.empty());
            CHECK(c.members().front() > previous_min);  // ordered by smallest member
            previous_min = c.members().front();
            merged.insert(merged.end(), c.members().begin(), c.members().end());
            CHECK(is_connected(g, c));
        }
        std::sort(merged.begin(), merged.end());
        CHECK(merged == within.members());  // exact partition, no duplicates

        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = a + 1; b < comps.size(); ++b)
                CHECK_FALSE(has_edge_between(g, comps[a], comps[b]));
    }
}

TEST_CASE("has_edge_between is symmetric") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_connected_graph(rng, 2, 12);
        VertexSet a = testutil::random_subset(rng, g.order(), 0.4, false);
        VertexSet b0 = testutil::random_subset(rng, g.order(), 0.4, false);
        VertexSet b = b0.set_difference(a);
        if (a.empty() || b.empty()) continue;
        CHECK(has_edge_between(g, a, b) == has_edge_between(g, b, a));
    }
}

TEST_SUITE_END();
