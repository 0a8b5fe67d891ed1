#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyncolor/generate.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/minor.hpp"

using namespace dyncolor;

namespace {

Graph petersen() {
    Graph g = cycle_graph(5);
    // inner pentagram 5..9, spokes i -- i+5
    for (int i = 0; i < 5; ++i) {
        g.add_edge_in_place(5 + i, 5 + (i + 2) % 5);
        g.add_edge_in_place(i, i + 5);
    }
    return g;
}

}  // namespace

TEST_CASE("has_minor") {
    Graph k5 = complete_graph(5);
    CHECK(has_minor(k5, k5));
    CHECK_FALSE(has_minor(wagner_v8(), k5));
    CHECK(has_minor(petersen(), k5));  // contract the five spokes
    CHECK(has_minor(wagner_v8(), complete_graph(4)));
    CHECK_FALSE(has_minor(cycle_graph(6), complete_graph(4)));
}

TEST_CASE("has_topological_minor") {
    CHECK(has_topological_minor(subdivided_complete(5), complete_graph(5)));
    CHECK_FALSE(has_topological_minor(cycle_graph(6), complete_graph(4)));
    CHECK(has_topological_minor(wagner_v8(), complete_graph(4)));
    CHECK(has_topological_minor(complete_bipartite(3, 3),
                                complete_bipartite(3, 3)));
}

TEST_CASE("topological minor implies minor") {
    std::vector<Graph> hosts{wagner_v8(), petersen(), subdivided_complete(4),
                             complete_bipartite(3, 3)};
    std::vector<Graph> targets{complete_graph(3), complete_graph(4),
                               complete_bipartite(2, 3)};
    for (const Graph& g : hosts)
        for (const Graph& h : targets)
            if (has_topological_minor(g, h)) CHECK(has_minor(g, h));
}

TEST_CASE("minor monotone along a contraction chain") {
    Graph g = petersen();
    Graph h = complete_graph(4);
    std::mt19937_64 rng(5);
    while (g.vertex_count() > 4 && has_minor(g, h)) {
        // g is a minor of the previous g, so containment must persist upward;
        // walk downward and re-check on each step that still contains h
        auto es = g.edges();
        auto [u, v] = es[rng() % es.size()];
        Graph next = contract_edge(g, u, v);
        if (!has_minor(next, h)) break;
        g = next;
        CHECK(has_minor(g, h));
    }
}

TEST_CASE("is_planar") {
    CHECK(is_planar(complete_graph(4)));
    CHECK_FALSE(is_planar(wagner_v8()));
    CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
    CHECK_FALSE(is_planar(complete_graph(5)));
    CHECK(is_planar(cycle_graph(9)));
    CHECK(is_planar(subdivided_complete(4)));
    CHECK_FALSE(is_planar(subdivided_complete(5)));
    CHECK_FALSE(is_planar(petersen()));
}

TEST_CASE("planar implies Euler bound") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_planar(8, rng());
        if (g.vertex_count() >= 3)
            CHECK(g.edge_count() <= 3 * g.vertex_count() - 6);
    }
}

TEST_CASE("classify_3connected") {
    auto k4 = classify_3connected(complete_graph(4));
    CHECK(k4.tag == HalinTag::Planar);

    auto v8 = classify_3connected(wagner_v8());
    CHECK(v8.tag == HalinTag::IsV8);

    Graph k33 = complete_bipartite(3, 3);
    auto verdict = classify_3connected(k33);
    REQUIRE(verdict.tag == HalinTag::ThreeCut);
    REQUIRE(verdict.cut.has_value());
    std::set<int> rest;
    for (int v : k33.vertices())
        if (!verdict.cut->count(v)) rest.insert(v);
    CHECK(components(induced_subgraph(k33, rest)).size() >= 3);
}

TEST_CASE("fixed graphs") {
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(complete_bipartite(3, 3).edge_count() == 9);
    Graph v8 = wagner_v8();
    CHECK(v8.vertex_count() == 8);
    CHECK(v8.edge_count() == 12);
    CHECK(v8.min_degree() == 3);
    CHECK(v8.max_degree() == 3);
}
