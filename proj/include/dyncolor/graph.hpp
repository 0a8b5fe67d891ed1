#ifndef DYNCOLOR_GRAPH_HPP
#define DYNCOLOR_GRAPH_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyncolor {

/// Thrown when an operation's precondition is violated.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown by suppress_degree_two when the input is a cycle.
struct CycleInputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;  // always stored as (min, max)

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph with stable non-negative integer vertex ids.
/// No loops, no parallel edges. Value type; cheap to copy at desk scale.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(const std::vector<Edge>& edges);

    void add_vertex(int v);
    void add_edge_in_place(int u, int v);
    void remove_vertex_in_place(int v);
    void remove_edge_in_place(int u, int v);

    bool has_vertex(int v) const { return adj_.count(v) != 0; }
    bool has_edge(int u, int v) const;

    const std::set<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const;
    int max_degree() const;

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const;

    std::vector<int> vertices() const;          // sorted
    std::vector<Edge> edges() const;            // sorted (min,max) pairs

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::map<int, std::set<int>> adj_;
};

/// A separation (A,B): A∪B = V, both strict sides nonempty, no edge between
/// A\B and B\A. Order = |A∩B|.
struct Separation {
    std::set<int> a;
    std::set<int> b;

    std::set<int> intersection() const;
    int order() const { return static_cast<int>(intersection().size()); }
};

/// Result of suppressing all degree-2 vertices.
/// path_map maps each suppressed edge to the interior vertices of the
/// original path(s) it replaces, ordered from the smaller endpoint. A key
/// (v,v) records a chain that would have become a loop; multiple entries
/// under one key record chains that would have become parallel edges.
struct SuppressionMap {
    Graph original;
    Graph suppressed;
    std::map<int, int> branch_map;                        // identity injection
    std::map<Edge, std::vector<std::vector<int>>> path_map;
};

// -- pure operations -------------------------------------------------------

Graph induced_subgraph(const Graph& g, const std::set<int>& vs);
Graph remove_vertex(const Graph& g, int v);

/// g/uv with loops and parallel edges dropped; merged vertex keeps min(u,v).
Graph contract_edge(const Graph& g, int u, int v);

/// g + uv; idempotent when uv is already present.
Graph add_edge(const Graph& g, int u, int v);

bool is_connected(const Graph& g);

/// Partition of V(g) into connected components, sorted by minimum vertex id.
std::vector<std::set<int>> components(const Graph& g);

/// Vertices whose removal disconnects g. Requires g connected.
std::set<int> cut_vertices(const Graph& g);

/// All separations of exactly the given order (1..3), each emitted once,
/// oriented so A\B contains the smallest non-cut vertex.
std::vector<Separation> enumerate_separations(const Graph& g, int order);

/// Contract away every degree-2 vertex. Requires g connected, min degree >= 2
/// and g not a cycle.
SuppressionMap suppress_degree_two(const Graph& g);

/// Re-expand a suppression: inverse of suppress_degree_two up to labels.
Graph expand_suppression(const SuppressionMap& sm);

/// Edge-preserving bijection test, backtracking with degree-sequence pruning.
bool is_isomorphic(const Graph& g, const Graph& h);

bool is_cycle(const Graph& g);
bool is_c5(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace dyncolor

#endif
