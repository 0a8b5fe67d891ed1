#ifndef DYNCOLOR_COLORING_HPP
#define DYNCOLOR_COLORING_HPP

#include "dyncolor/graph.hpp"

#include <optional>

namespace dyncolor {

/// Thrown when an exact-solver call exceeds its time limit.
struct SolverTimeout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Partial or total map vertex -> color in {1..k}.
struct Coloring {
    int k = 0;
    std::map<int, int> assignment;

    bool is_total_on(const Graph& g) const;
    int colors_used() const;
};

/// Verifier output: proper violations and unhappy vertices.
struct HappyReport {
    std::vector<Edge> proper_violations;
    std::vector<int> unhappy;
    bool ok = false;
};

/// True iff deg(v) <= 1 or v's neighbors carry at least two colors.
/// Requires every neighbor of v colored.
bool is_happy(const Graph& g, const Coloring& c, int v);

/// ok iff c is a total proper coloring of g and every vertex is happy.
HappyReport verify_dynamic(const Graph& g, const Coloring& c);

/// Deterministic backtracking search for a total dynamic k-coloring of g
/// extending pre; vertices by descending degree (ties by id), colors
/// ascending. Throws SolverTimeout when time_limit_secs elapses.
std::optional<Coloring> solve_exact(const Graph& g, int k,
                                    const Coloring& pre = {},
                                    double time_limit_secs = 0.0);

/// Same search with happiness checks disabled: a proper k-coloring.
std::optional<Coloring> solve_proper(const Graph& g, int k,
                                     double time_limit_secs = 0.0);

/// Dynamic chromatic number, iterating k up from a greedy-clique lower bound.
int chi_d(const Graph& g, double time_limit_secs = 0.0);

/// Ordinary chromatic number via the same backtracking.
int chi(const Graph& g, double time_limit_secs = 0.0);

/// Default per-call exact-solver time limit: DYNCOLOR_TIME_LIMIT_SECS env
/// var, or 60 seconds. 0 disables the limit.
double default_time_limit();

}  // namespace dyncolor

#endif
