#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcd/graph.hpp"

using namespace bcd;

static WeightedGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return WeightedGraph(n, std::vector<Weight>(n, 1), edges);
}

TEST_CASE("construction validates input") {
    CHECK_THROWS_AS(WeightedGraph(2, {1, 0}, {}), InvalidGraph);
    CHECK_THROWS_AS(WeightedGraph(2, {1, 1}, {{0, 0}}), InvalidGraph);
    CHECK_THROWS_AS(WeightedGraph(2, {1, 1}, {{0, 1}, {1, 0}}), InvalidGraph);
    CHECK_THROWS_AS(WeightedGraph(2, {1, 1}, {{0, 2}}), InvalidGraph);
    WeightedGraph g(3, {1, 2, 3}, {{0, 1}, {1, 2}});
    CHECK(g.total_weight() == 6);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
}

TEST_CASE("connected components") {
    WeightedGraph tri(3, {1, 1, 1}, {{0, 1}, {1, 2}, {0, 2}});
    auto comps = connected_components(tri, {0, 1, 2});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == VertexSet{0, 1, 2});

    WeightedGraph p3 = path_graph(3);
    comps = connected_components(p3, {0, 2});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{2});

    CHECK(connected_components(p3, {}).empty());
}

TEST_CASE("component union equals restrict, parts disjoint") {
    // small fixed sweep over a handful of graphs and restrictions
    WeightedGraph g(6, std::vector<Weight>(6, 1),
                    {{0, 1}, {1, 2}, {3, 4}});
    for (VertexSet restrict_to :
         {VertexSet{0, 1, 2, 3, 4, 5}, VertexSet{1, 3, 5}, VertexSet{0, 2}}) {
        auto comps = connected_components(g, restrict_to);
        VertexSet all;
        for (auto& c : comps) {
            for (int v : c) all.push_back(v);
        }
        std::sort(all.begin(), all.end());
        CHECK(all == restrict_to);
    }
}

TEST_CASE("induced weight") {
    WeightedGraph g(2, {5, 7}, {{0, 1}});
    CHECK(induced_weight(g, {1}) == 7);
    CHECK(induced_weight(g, {0, 1}) == 12);
    CHECK(induced_weight(g, {}) == 0);
}

TEST_CASE("spanning tree star and path") {
    WeightedGraph star(4, std::vector<Weight>(4, 1),
                       {{0, 1}, {0, 2}, {0, 3}});
    auto t = spanning_tree(star, 0, {0, 1, 2, 3});
    CHECK(t.parent[0] == -1);
    CHECK(t.parent[1] == 0);
    CHECK(t.parent[2] == 0);
    CHECK(t.parent[3] == 0);

    WeightedGraph p3 = path_graph(3);
    t = spanning_tree(p3, 2, {0, 1, 2});
    CHECK(t.parent[2] == -1);
    CHECK(t.parent[1] == 2);
    CHECK(t.parent[0] == 1);

    t = spanning_tree(p3, 0, {0});
    CHECK(t.order == std::vector<int>{0});

    CHECK_THROWS_AS(spanning_tree(p3, 0, {0, 2}), DisconnectedInput);
}

TEST_CASE("spanning tree has |restrict|-1 edges and no cycle") {
    WeightedGraph g(5, std::vector<Weight>(5, 1),
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
    auto t = spanning_tree(g, 0, {0, 1, 2, 3, 4});
    int edges = 0;
    for (int v = 0; v < 5; ++v)
        if (t.parent[v] >= 0) ++edges;
    CHECK(edges == 4);  // n-1 parent entries: a tree, hence acyclic
}

TEST_CASE("set helpers") {
    CHECK(set_union({1, 3}, {2, 3}) == VertexSet{1, 2, 3});
    CHECK(set_minus({1, 2, 3}, {2}) == VertexSet{1, 3});
    CHECK(set_intersect({1, 2, 3}, {2, 4}) == VertexSet{2});
    CHECK(set_contains({1, 5, 9}, 5));
    CHECK(!set_contains({1, 5, 9}, 4));
}
