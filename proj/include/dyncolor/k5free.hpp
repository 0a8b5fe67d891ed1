#ifndef DYNCOLOR_K5FREE_HPP
#define DYNCOLOR_K5FREE_HPP

#include "dyncolor/coloring.hpp"
#include "dyncolor/graph.hpp"

#include <array>

namespace dyncolor {

/// Input is C5 (the one graph with no dynamic 4-coloring in this class).
struct NotColorableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A merge step failed where the underlying lemma guarantees success;
/// signals an implementation bug or a violated precondition.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class StepKind {
    Order1,
    Order2Case1,
    Order2Case2,
    Order3Case1,
    Order3Case2,
    Order3Case3,
    PlanarBase,
    V8Base,
    C5Fallback,
    OracleFallback,
};

const char* step_name(StepKind k);

struct TraceStep {
    StepKind kind;
    std::vector<int> cut;                 // cut vertex / A∩B, when applicable
    std::size_t parent_vertices = 0;
    std::size_t parent_edges = 0;
    std::vector<std::pair<std::size_t, std::size_t>> children;  // (V,E) per subproblem
};

struct ReductionTrace {
    std::vector<TraceStep> steps;
    std::vector<std::string> lines() const;
};

struct K5FreeResult {
    Coloring coloring;
    ReductionTrace trace;
    int logged_fallbacks = 0;  // condition-check fallbacks to the oracle
};

/// The five hard-coded C5 colorings used when a recursive subgraph collapses
/// to C5, as colors along the cyclic order starting at the attachment vertex.
struct C5FallbackTable {
    static constexpr std::array<int, 5> order1{1, 2, 3, 4, 2};       // v,a,b,c,d
    static constexpr std::array<int, 5> order2_case1{1, 2, 3, 4, 2}; // x,a,b,c,y
    static constexpr std::array<int, 5> order2_case2{1, 2, 3, 4, 2}; // x=y,a,b,c,d
    static constexpr std::array<int, 5> order3_case2{1, 2, 4, 3, 2}; // x=y,a,b,c,z
    static constexpr std::array<int, 5> order3_case3{1, 2, 3, 4, 2}; // x=y=z,a,b,c,d
};

/// Constructive dynamic 4-coloring of a connected K5-minor-free graph other
/// than C5, via separations of order 1-3 with exact-oracle base cases. The
/// result is verified before returning.
K5FreeResult color_k5free(const Graph& g, double time_limit_secs = 0.0);

}  // namespace dyncolor

#endif
