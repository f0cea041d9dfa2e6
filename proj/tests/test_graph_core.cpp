#include <catch2/catch_amalgamated.hpp>

#include <secdom/graph.hpp>

#include "oracles.hpp"

using secdom::Graph;
using secdom::VertexSet;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({0, 2, 5});
    REQUIRE(s.count() == 3);
    REQUIRE(s.contains(2));
    REQUIRE_FALSE(s.contains(1));
    REQUIRE(s.first() == 0);
    REQUIRE(s.to_vector() == std::vector<int>{0, 2, 5});

    s.add(1);
    s.remove(5);
    REQUIRE(s == VertexSet::of({0, 1, 2}));
    REQUIRE(s.with(5).contains(5));
    REQUIRE_FALSE(s.without(0).contains(0));
    REQUIRE(s == VertexSet::of({0, 1, 2}));  // with/without do not mutate

    REQUIRE(VertexSet::full(3) == VertexSet::of({0, 1, 2}));
    REQUIRE(VertexSet::full(0).empty());
    REQUIRE(VertexSet::single(7) == VertexSet::of({7}));

    VertexSet a = VertexSet::of({0, 1, 4});
    VertexSet b = VertexSet::of({1, 4, 6});
    REQUIRE((a & b) == VertexSet::of({1, 4}));
    REQUIRE((a | b) == VertexSet::of({0, 1, 4, 6}));
    REQUIRE((a ^ b) == VertexSet::of({0, 6}));
    REQUIRE((a - b) == VertexSet::of({0}));
    REQUIRE(VertexSet::of({1, 4}).subset_of(a));
    REQUIRE_FALSE(a.subset_of(b));
    REQUIRE(a.intersects(b));
    REQUIRE_FALSE(VertexSet::of({2}).intersects(a));

    std::vector<int> seen;
    for (int v : VertexSet::of({3, 0, 63})) seen.push_back(v);
    REQUIRE(seen == std::vector<int>{0, 3, 63});  // ascending iteration
}

TEST_CASE("lexicographic order on equal-size sets") {
    REQUIRE(secdom::lex_before(VertexSet::of({0, 2}), VertexSet::of({0, 3})));
    REQUIRE(secdom::lex_before(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
    REQUIRE_FALSE(secdom::lex_before(VertexSet::of({1, 2}), VertexSet::of({0, 3})));
    REQUIRE_FALSE(secdom::lex_before(VertexSet::of({1}), VertexSet::of({1})));
}

TEST_CASE("graph construction and validation") {
    Graph g = secdom::build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edge_count() == 3);  // duplicate collapsed
    REQUIRE(g.has_edge(1, 2));
    REQUIRE(g.has_edge(2, 1));
    REQUIRE_FALSE(g.has_edge(0, 2));
    REQUIRE(g.neighbors(1) == VertexSet::of({0, 2}));
    REQUIRE(g.closed_neighborhood(1) == VertexSet::of({0, 1, 2}));
    REQUIRE(g.degree(1) == 2);
    REQUIRE(g.degree(0) == 1);
    REQUIRE(g.max_degree() == 2);
    REQUIRE(g.vertices() == VertexSet::full(4));
    REQUIRE(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    REQUIRE_THROWS_AS(Graph(-1, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(65, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    REQUIRE_NOTHROW(Graph(0, {}));
    REQUIRE_NOTHROW(Graph(64, {{62, 63}}));
}

TEST_CASE("induced subgraph relabels and reports the map") {
    Graph c5 = oracle::cycle_graph(5);
    auto [h, map] = secdom::induced_subgraph(c5, VertexSet::of({0, 1, 3}));
    REQUIRE(h.vertex_count() == 3);
    REQUIRE(map == std::vector<int>{0, 1, 3});
    REQUIRE(h.edge_list() == std::vector<std::pair<int, int>>{{0, 1}});

    auto [all, amap] = secdom::induced_subgraph(c5, VertexSet::full(5));
    REQUIRE(all.edge_list() == c5.edge_list());

    REQUIRE_THROWS_AS(secdom::induced_subgraph(c5, VertexSet::of({5})), std::out_of_range);
}

TEST_CASE("completeness of a vertex subset") {
    Graph k4 = oracle::complete_graph(4);
    REQUIRE(secdom::is_complete_on(k4, VertexSet::of({0, 1, 2, 3})));
    REQUIRE(secdom::is_complete_on(k4, VertexSet::of({1, 3})));
    REQUIRE(secdom::is_complete_on(k4, VertexSet::of({2})));
    REQUIRE(secdom::is_complete_on(k4, VertexSet{}));

    Graph p3 = oracle::path_graph(3);
    REQUIRE_FALSE(secdom::is_complete_on(p3, VertexSet::full(3)));
    REQUIRE(secdom::is_complete_on(p3, VertexSet::of({0, 1})));
    REQUIRE_FALSE(secdom::is_complete_on(p3, VertexSet::of({0, 2})));
}

TEST_CASE("connected components in order of smallest member") {
    Graph g = secdom::disjoint_union(oracle::path_graph(2), oracle::complete_graph(3));
    auto comps = secdom::connected_components(g);
    REQUIRE(comps.size() == 2);
    REQUIRE(comps[0] == VertexSet::of({0, 1}));
    REQUIRE(comps[1] == VertexSet::of({2, 3, 4}));
    REQUIRE_FALSE(secdom::is_connected(g));
    REQUIRE(secdom::is_connected(oracle::cycle_graph(4)));
    REQUIRE(secdom::is_connected(Graph(1, {})));
    REQUIRE(secdom::is_connected(Graph(0, {})));  // vacuous

    Graph isolated(3, {{0, 1}});
    auto comps2 = secdom::connected_components(isolated);
    REQUIRE(comps2.size() == 2);
    REQUIRE(comps2[1] == VertexSet::of({2}));
}

TEST_CASE("bipartition") {
    auto c4 = secdom::bipartition(oracle::cycle_graph(4));
    REQUIRE(c4.has_value());
    REQUIRE(c4->first == VertexSet::of({0, 2}));
    REQUIRE(c4->second == VertexSet::of({1, 3}));

    REQUIRE_FALSE(secdom::bipartition(oracle::cycle_graph(5)).has_value());
    REQUIRE_FALSE(secdom::bipartition(oracle::complete_graph(3)).has_value());

    Graph two = secdom::disjoint_union(oracle::path_graph(3), oracle::cycle_graph(4));
    auto bp = secdom::bipartition(two);
    REQUIRE(bp.has_value());
    REQUIRE((bp->first | bp->second) == two.vertices());
    REQUIRE((bp->first & bp->second).empty());
    for (auto [u, v] : two.edge_list())
        REQUIRE(bp->first.contains(u) != bp->first.contains(v));
    REQUIRE(bp->first.contains(0));  // smallest vertex of each component lands in the first side
    REQUIRE(bp->first.contains(3));
}

TEST_CASE("relabeling") {
    Graph p3 = oracle::path_graph(3);
    Graph q = secdom::permuted(p3, {2, 0, 1});  // old 0 becomes 2, 1 becomes 0, 2 becomes 1
    REQUIRE(q.has_edge(2, 0));
    REQUIRE(q.has_edge(0, 1));
    REQUIRE_FALSE(q.has_edge(1, 2));
    REQUIRE(oracle::isomorphic_brute(p3, q));

    REQUIRE_THROWS_AS(secdom::permuted(p3, {0, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(secdom::permuted(p3, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("edge tweaks and disjoint union") {
    Graph p3 = oracle::path_graph(3);
    REQUIRE(secdom::with_edge(p3, 0, 2).edge_count() == 3);
    REQUIRE(secdom::with_edge(p3, 0, 1).edge_count() == 2);  // already present
    REQUIRE(secdom::without_edge(p3, 0, 1).edge_count() == 1);
    REQUIRE(secdom::without_edge(p3, 0, 2).edge_count() == 2);  // absent

    Graph u = secdom::disjoint_union(oracle::cycle_graph(3), oracle::path_graph(2));
    REQUIRE(u.vertex_count() == 5);
    REQUIRE(u.edge_count() == 4);
    REQUIRE(u.has_edge(3, 4));
    REQUIRE_FALSE(u.has_edge(2, 3));
}

TEST_CASE("subset guard names the operation") {
    Graph p3 = oracle::path_graph(3);
    REQUIRE_THROWS_WITH(secdom::check_subset(p3, VertexSet::of({3}), "demo"),
                        Catch::Matchers::ContainsSubstring("demo"));
    REQUIRE_NOTHROW(secdom::check_subset(p3, VertexSet::of({0, 2}), "demo"));
}
