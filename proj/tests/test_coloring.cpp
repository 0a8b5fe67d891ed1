#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyncolor/coloring.hpp"
#include "dyncolor/generate.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/minor.hpp"

using namespace dyncolor;

namespace {

Coloring make(int k, std::map<int, int> a) { return Coloring{k, std::move(a)}; }

}  // namespace

TEST_CASE("is_happy") {
    Graph g;
    g.add_vertex(0);
    CHECK(is_happy(g, make(1, {{0, 1}}), 0));  // isolated

    Graph star = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(is_happy(star, make(4, {{0, 1}, {1, 2}, {2, 2}, {3, 2}}), 0));
    CHECK(is_happy(star, make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 2}}), 0));

    // C5 v,a,b,c,d = 0..4 colored 1,2,3,4,2: v unhappy, b happy
    Graph c5 = cycle_graph(5);
    auto c = make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}});
    CHECK_FALSE(is_happy(c5, c, 0));
    CHECK(is_happy(c5, c, 2));
}

TEST_CASE("verify_dynamic") {
    Graph k2 = Graph::from_edges({{0, 1}});
    CHECK(verify_dynamic(k2, make(2, {{0, 1}, {1, 2}})).ok);

    Graph c6 = cycle_graph(6);
    CHECK(verify_dynamic(
              c6, make(3, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {4, 2}, {5, 3}}))
              .ok);

    Graph c5 = cycle_graph(5);
    auto rep = verify_dynamic(c5, make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}}));
    CHECK_FALSE(rep.ok);
    CHECK(rep.proper_violations.empty());
    CHECK(rep.unhappy == std::vector<int>{0});

    // partial coloring is never ok
    CHECK_FALSE(verify_dynamic(k2, make(2, {{0, 1}})).ok);
}

TEST_CASE("solve_exact on C5") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(solve_exact(c5, 4).has_value());
    auto c = solve_exact(c5, 5);
    REQUIRE(c.has_value());
    CHECK(verify_dynamic(c5, *c).ok);
}

TEST_CASE("solve_exact respects precoloring") {
    Graph k2 = Graph::from_edges({{0, 1}});
    Coloring pre = make(2, {{0, 1}});
    auto c = solve_exact(k2, 2, pre);
    REQUIRE(c.has_value());
    CHECK(c->assignment.at(0) == 1);
    CHECK(c->assignment.at(1) == 2);
}

TEST_CASE("chi_d exact values") {
    CHECK(chi_d(cycle_graph(5)) == 5);
    CHECK(chi_d(subdivided_complete(4)) == 4);
    CHECK(chi_d(cycle_graph(4)) == 4);
}

TEST_CASE("chi exact values") {
    CHECK(chi(cycle_graph(5)) == 3);
    CHECK(chi(complete_graph(4)) == 4);
    CHECK(chi(subdivided_complete(5)) == 2);
}

TEST_CASE("chi <= chi_d on all small graphs") {
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(chi(g) <= chi_d(g));
}

TEST_CASE("solver output always verifies") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_planar(7, rng());
        for (int k = 2; k <= 5; ++k)
            if (auto c = solve_exact(g, k)) CHECK(verify_dynamic(g, *c).ok);
    }
}

TEST_CASE("planar non-C5 graphs are dynamically 4-colorable") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_planar(8, rng());
        if (is_c5(g)) continue;
        CHECK(solve_exact(g, 4).has_value());
    }
}

TEST_CASE("solver time limit") {
    // a limit that cannot be met on a hard instance raises SolverTimeout
    Graph g = clique_sum(3, 99);
    CHECK_THROWS_AS(solve_exact(g, 4, {}, 1e-9), SolverTimeout);
}
