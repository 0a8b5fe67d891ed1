#ifndef DYNCOLOR_MINOR_HPP
#define DYNCOLOR_MINOR_HPP

#include "dyncolor/graph.hpp"

#include <optional>

namespace dyncolor {

/// Thrown by classify_3connected when neither verdict applies; signals a bug
/// or a violated precondition.
struct TheoremViolationError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class HalinTag { Planar, IsV8, ThreeCut };

/// Trichotomy verdict for a 3-connected K5-minor-free graph.
struct HalinVerdict {
    HalinTag tag;
    std::optional<std::set<int>> cut;  // present iff tag == ThreeCut
};

/// True iff some subgraph of g is isomorphic to h.
bool has_subgraph(const Graph& g, const Graph& h);

/// Minor containment, branch-and-bound over edge contractions with a
/// subgraph-isomorphism check at each node. Intended for small h.
bool has_minor(const Graph& g, const Graph& h);

/// True iff some subgraph of g is a subdivision of h (branch vertices mapped
/// injectively, branch paths internally disjoint).
bool has_topological_minor(const Graph& g, const Graph& h);

/// Kuratowski: planar iff no K5 and no K3,3 topological minor.
bool is_planar(const Graph& g);

/// Requires g 3-connected with no K5 minor. Tries Planar, then V8, then an
/// exhaustive search for a 3-cut leaving >= 3 components.
HalinVerdict classify_3connected(const Graph& g);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph wagner_v8();

}  // namespace dyncolor

#endif
