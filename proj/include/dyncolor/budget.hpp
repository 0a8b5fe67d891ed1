#ifndef DYNCOLOR_BUDGET_HPP
#define DYNCOLOR_BUDGET_HPP

#include "dyncolor/coloring.hpp"
#include "dyncolor/graph.hpp"

namespace dyncolor {

/// A graph reached by the degeneracy recursion has minimum degree above k;
/// carries the witness. Certifies that the topological-minor degeneracy
/// hypothesis did not hold.
struct DegeneracyViolation : std::runtime_error {
    Graph witness;
    explicit DegeneracyViolation(Graph w)
        : std::runtime_error("intermediate graph has minimum degree above k"),
          witness(std::move(w)) {}
};

enum class BudgetMode { TopologicalMinor, Minor };

/// Color budget for K_t-free graphs: 10t^2+2 (topological minor) or
/// floor(16t*sqrt(log2 t))+3 (minor). Requires t >= 2.
int budget(BudgetMode mode, int t);

/// Greedy (k+3)-coloring by recursion on a minimum-degree vertex. Requires g
/// connected; every graph reached must have minimum degree <= k.
Coloring color_degenerate(const Graph& g, int k);

/// Dynamic (|X|+4)-coloring of a graph whose deletion of X leaves a planar
/// graph. Requires g \ X planar.
Coloring color_apex(const Graph& g, const std::set<int>& x,
                    double time_limit_secs = 0.0);

/// color_degenerate with k = budget(mode, t) - 3.
Coloring color_no_kt(const Graph& g, BudgetMode mode, int t);

}  // namespace dyncolor

#endif
