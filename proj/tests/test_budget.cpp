#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyncolor/budget.hpp"
#include "dyncolor/coloring.hpp"
#include "dyncolor/generate.hpp"
#include "dyncolor/graph.hpp"
#include "dyncolor/k5free.hpp"
#include "dyncolor/minor.hpp"

using namespace dyncolor;

TEST_CASE("budget pinned values") {
    CHECK(budget(BudgetMode::TopologicalMinor, 3) == 92);
    CHECK(budget(BudgetMode::Minor, 2) == 35);
    CHECK(budget(BudgetMode::Minor, 3) == 63);
    CHECK(budget(BudgetMode::Minor, 4) == 93);
    CHECK(budget(BudgetMode::Minor, 5) == 124);
    CHECK_THROWS_AS(budget(BudgetMode::Minor, 1), PreconditionError);
    CHECK_THROWS_AS(budget(BudgetMode::TopologicalMinor, 0), PreconditionError);
}

TEST_CASE("budget strictly increasing") {
    for (int t = 2; t < 10; ++t) {
        CHECK(budget(BudgetMode::TopologicalMinor, t) <
              budget(BudgetMode::TopologicalMinor, t + 1));
        CHECK(budget(BudgetMode::Minor, t) < budget(BudgetMode::Minor, t + 1));
    }
}

TEST_CASE("color_degenerate on trees and cycles") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        Graph t = random_tree(12, rng());
        auto c = color_degenerate(t, 2);
        CHECK(verify_dynamic(t, c).ok);
        CHECK(c.colors_used() <= 5);
    }
    Graph c6 = cycle_graph(6);
    auto c = color_degenerate(c6, 2);
    CHECK(verify_dynamic(c6, c).ok);
    CHECK(c.colors_used() <= 5);
}

TEST_CASE("color_degenerate on subdivided K5") {
    Graph g = subdivided_complete(5);
    auto c = color_degenerate(g, 4);
    CHECK(verify_dynamic(g, c).ok);
    CHECK(c.colors_used() <= 7);
    CHECK(c.colors_used() >= 5);  // chi_d of a subdivided K_n is n
}

TEST_CASE("color_degenerate degeneracy violation") {
    CHECK_THROWS_AS(color_degenerate(complete_graph(5), 2), DegeneracyViolation);
    try {
        color_degenerate(complete_graph(5), 2);
    } catch (const DegeneracyViolation& e) {
        CHECK(e.witness.min_degree() > 2);
    }
}

TEST_CASE("color_apex on K5") {
    Graph k5 = complete_graph(5);
    auto c = color_apex(k5, {0});
    CHECK(verify_dynamic(k5, c).ok);
    CHECK(c.colors_used() <= 5);
    CHECK(chi_d(k5) == 5);  // the bound is tight here
}

TEST_CASE("color_apex with empty apex set on planar input") {
    Graph g = complete_graph(4);
    auto c = color_apex(g, {});
    CHECK(verify_dynamic(g, c).ok);
    CHECK(c.colors_used() <= 4);
}

TEST_CASE("color_apex on C5 with one apex vertex spends the budget") {
    Graph c5 = cycle_graph(5);
    auto c = color_apex(c5, {0});
    CHECK(verify_dynamic(c5, c).ok);
    CHECK(c.colors_used() == 5);  // chi_d(C5) = 5 forces it
    CHECK_THROWS_AS(color_apex(c5, {}), PreconditionError);
}

TEST_CASE("color_apex with universal vertices") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = random_planar(8, rng());
        int a = 100, b = 101;
        for (int v : g.vertices())
            if (v < 100) {
                g.add_edge_in_place(a, v);
                g.add_edge_in_place(b, v);
            }
        auto c = color_apex(g, {a, b});
        CHECK(verify_dynamic(g, c).ok);
        CHECK(c.colors_used() <= 6);
    }
}

TEST_CASE("color_apex rejects nonplanar remainder") {
    Graph g = wagner_v8();
    g.add_edge_in_place(8, 0);
    CHECK_THROWS_AS(color_apex(g, {8}), PreconditionError);
}

TEST_CASE("color_no_kt") {
    Graph t = random_tree(20, 5);
    auto c = color_no_kt(t, BudgetMode::TopologicalMinor, 3);
    CHECK(verify_dynamic(t, c).ok);
    CHECK(c.colors_used() <= 92);

    Graph c5 = cycle_graph(5);
    auto c2 = color_no_kt(c5, BudgetMode::Minor, 3);
    CHECK(verify_dynamic(c5, c2).ok);
    CHECK(c2.colors_used() <= budget(BudgetMode::Minor, 3));

    Graph p = random_planar(10, 9);
    auto c3 = color_no_kt(p, BudgetMode::Minor, 5);
    CHECK(verify_dynamic(p, c3).ok);
    CHECK(c3.colors_used() <= budget(BudgetMode::Minor, 5));
}
