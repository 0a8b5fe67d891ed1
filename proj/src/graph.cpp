#include "dyncolor/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace dyncolor {

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    Graph g;
    for (const auto& [u, v] : edges) g.add_edge_in_place(u, v);
    return g;
}

void Graph::add_vertex(int v) {
    if (v < 0) throw PreconditionError("vertex ids must be non-negative");
    adj_.try_emplace(v);
}

void Graph::add_edge_in_place(int u, int v) {
    if (u == v) throw PreconditionError("loops are not allowed");
    add_vertex(u);
    add_vertex(v);
    adj_[u].insert(v);
    adj_[v].insert(u);
}

void Graph::remove_vertex_in_place(int v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw PreconditionError("no such vertex");
    for (int w : it->second) adj_[w].erase(v);
    adj_.erase(it);
}

void Graph::remove_edge_in_place(int u, int v) {
    if (!has_edge(u, v)) throw PreconditionError("no such edge");
    adj_[u].erase(v);
    adj_[v].erase(u);
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw PreconditionError("no such vertex");
    return it->second;
}

int Graph::min_degree() const {
    int d = -1;
    for (const auto& [v, ns] : adj_) {
        (void)v;
        int dv = static_cast<int>(ns.size());
        if (d < 0 || dv < d) d = dv;
    }
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [v, ns] : adj_) {
        (void)v;
        d = std::max(d, static_cast<int>(ns.size()));
    }
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, ns] : adj_) {
        (void)v;
        twice += ns.size();
    }
    return twice / 2;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> vs;
    vs.reserve(adj_.size());
    for (const auto& [v, ns] : adj_) {
        (void)ns;
        vs.push_back(v);
    }
    return vs;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    for (const auto& [v, ns] : adj_)
        for (int w : ns)
            if (v < w) es.emplace_back(v, w);
    return es;
}

std::set<int> Separation::intersection() const {
    std::set<int> x;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(x, x.end()));
    return x;
}

Graph induced_subgraph(const Graph& g, const std::set<int>& vs) {
    Graph h;
    for (int v : vs) {
        h.add_vertex(v);
        for (int w : g.neighbors(v))
            if (w > v && vs.count(w)) h.add_edge_in_place(v, w);
    }
    return h;
}

Graph remove_vertex(const Graph& g, int v) {
    Graph h = g;
    h.remove_vertex_in_place(v);
    return h;
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw PreconditionError("contract_edge: uv is not an edge");
    int keep = std::min(u, v), gone = std::max(u, v);
    Graph h;
    for (int w : g.vertices())
        if (w != gone) h.add_vertex(w);
    for (const auto& [a, b] : g.edges()) {
        int x = (a == gone) ? keep : a;
        int y = (b == gone) ? keep : b;
        if (x != y) h.add_edge_in_place(x, y);
    }
    return h;
}

Graph add_edge(const Graph& g, int u, int v) {
    if (u == v) throw PreconditionError("add_edge: endpoints must differ");
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw PreconditionError("add_edge: endpoint not in graph");
    Graph h = g;
    if (!h.has_edge(u, v)) h.add_edge_in_place(u, v);
    return h;
}

bool is_connected(const Graph& g) {
    return components(g).size() <= 1;
}

std::vector<std::set<int>> components(const Graph& g) {
    std::set<int> todo;
    for (int v : g.vertices()) todo.insert(v);
    std::vector<std::set<int>> comps;
    while (!todo.empty()) {
        int start = *todo.begin();
        std::set<int> comp;
        std::deque<int> queue{start};
        todo.erase(start);
        comp.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (todo.erase(w)) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    // components() discovers in order of smallest remaining id, already sorted
    return comps;
}

std::set<int> cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("cut_vertices: graph must be connected");
    std::set<int> cuts;
    if (g.vertex_count() <= 2) return cuts;
    for (int v : g.vertices()) {
        if (!is_connected(remove_vertex(g, v))) cuts.insert(v);
    }
    return cuts;
}

namespace {

void subsets_of_size(const std::vector<int>& vs, int k,
                     std::vector<int>& cur, std::size_t from,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < vs.size(); ++i) {
        cur.push_back(vs[i]);
        subsets_of_size(vs, k, cur, i + 1, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Separation> enumerate_separations(const Graph& g, int order) {
    if (!is_connected(g)) throw PreconditionError("enumerate_separations: graph must be connected");
    if (order < 1 || order > 3) throw PreconditionError("enumerate_separations: order must be 1..3");
    std::vector<Separation> seps;
    auto vs = g.vertices();
    if (static_cast<int>(vs.size()) < order + 2) return seps;

    std::vector<std::vector<int>> cuts;
    std::vector<int> cur;
    subsets_of_size(vs, order, cur, 0, cuts);

    for (const auto& cut : cuts) {
        Graph rest = g;
        for (int x : cut) rest.remove_vertex_in_place(x);
        auto comps = components(rest);
        if (comps.size() < 2) continue;
        int smallest_free = *comps.front().begin();
        // all 2-partitions of components into nonempty sides; fix the
        // component of the smallest non-cut vertex on the A side
        std::size_t k = comps.size();
        for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
            if (!(mask & 1)) continue;  // comps[0] (holds smallest_free) in A
            Separation s;
            s.a.insert(cut.begin(), cut.end());
            s.b.insert(cut.begin(), cut.end());
            for (std::size_t i = 0; i < k; ++i) {
                auto& side = (mask >> i & 1) ? s.a : s.b;
                side.insert(comps[i].begin(), comps[i].end());
            }
            (void)smallest_free;
            seps.push_back(std::move(s));
        }
    }
    return seps;
}

bool is_cycle(const Graph& g) {
    return g.vertex_count() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 &&
           is_connected(g);
}

bool is_c5(const Graph& g) {
    return g.vertex_count() == 5 && is_cycle(g);
}

SuppressionMap suppress_degree_two(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("suppress_degree_two: graph must be connected");
    if (g.min_degree() < 2) throw PreconditionError("suppress_degree_two: minimum degree must be >= 2");
    if (is_cycle(g)) throw CycleInputError("suppress_degree_two: input is a cycle");

    SuppressionMap sm;
    sm.original = g;

    std::set<int> branch;
    for (int v : g.vertices())
        if (g.degree(v) >= 3) branch.insert(v);

    for (int v : branch) {
        sm.suppressed.add_vertex(v);
        sm.branch_map[v] = v;
    }

    std::set<Edge> walked;  // first edge of each traversed chain, both ends
    for (int u : branch) {
        for (int first : g.neighbors(u)) {
            if (!walked.insert(make_edge(u, first)).second && branch.count(first) == 0)
                continue;
            // walk u -> first -> ... through degree-2 vertices to a branch vertex
            std::vector<int> interior;
            int prev = u, curv = first;
            while (branch.count(curv) == 0) {
                interior.push_back(curv);
                const auto& ns = g.neighbors(curv);
                int next = -1;
                for (int w : ns)
                    if (w != prev) next = w;
                prev = curv;
                curv = next;
            }
            walked.insert(make_edge(prev, curv));
            int w = curv;
            if (interior.empty()) {
                // direct branch-branch edge, each seen twice; record once
                if (u > w) continue;
                sm.suppressed.add_edge_in_place(u, w);
                sm.path_map[make_edge(u, w)].push_back({});
                continue;
            }
            // interior chains are claimed by the first endpoint reached, so
            // the walked-edge set already deduplicates them
            Edge e = make_edge(u, w);
            if (u != w && !sm.suppressed.has_edge(u, w)) sm.suppressed.add_edge_in_place(u, w);
            // a duplicate or loop chain stays only in path_map, keeping the
            // suppressed graph simple
            sm.path_map[u == w ? Edge{u, u} : e].push_back(interior);
        }
    }
    return sm;
}

Graph expand_suppression(const SuppressionMap& sm) {
    Graph g;
    for (int v : sm.suppressed.vertices()) g.add_vertex(v);
    for (const auto& [e, paths] : sm.path_map) {
        for (const auto& interior : paths) {
            if (interior.empty()) {
                g.add_edge_in_place(e.first, e.second);
                continue;
            }
            int prev = e.first;
            for (int mid : interior) {
                g.add_edge_in_place(prev, mid);
                prev = mid;
            }
            g.add_edge_in_place(prev, e.second);
        }
    }
    return g;
}

namespace {

struct IsoState {
    const Graph* g;
    const Graph* h;
    std::vector<int> gv, hv;              // vertex lists
    std::map<int, int> map_gh;            // g id -> h id
    std::set<int> used_h;

    bool extend(std::size_t i) {
        if (i == gv.size()) return true;
        int u = gv[i];
        for (int x : hv) {
            if (used_h.count(x)) continue;
            if (h->degree(x) != g->degree(u)) continue;
            bool ok = true;
            for (int w : g->neighbors(u)) {
                auto it = map_gh.find(w);
                if (it != map_gh.end() && !h->has_edge(x, it->second)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // mapped non-neighbors must stay non-adjacent
                for (const auto& [w, y] : map_gh) {
                    if (!g->has_edge(u, w) && h->has_edge(x, y)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map_gh[u] = x;
            used_h.insert(x);
            if (extend(i + 1)) return true;
            map_gh.erase(u);
            used_h.erase(x);
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    auto degseq = [](const Graph& x) {
        std::vector<int> ds;
        for (int v : x.vertices()) ds.push_back(x.degree(v));
        std::sort(ds.begin(), ds.end());
        return ds;
    };
    if (degseq(g) != degseq(h)) return false;

    IsoState st;
    st.g = &g;
    st.h = &h;
    st.gv = g.vertices();
    st.hv = h.vertices();
    // match high-degree vertices first
    std::stable_sort(st.gv.begin(), st.gv.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return st.extend(0);
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges";
    for (const auto& [u, v] : g.edges()) os << " " << u << "-" << v;
    return os.str();
}

}  // namespace dyncolor
