#include "dyncolor/generate.hpp"

#include "dyncolor/minor.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace dyncolor {

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle: n must be >= 3");
    Graph g;
    for (int i = 0; i < n; ++i) g.add_edge_in_place(i, (i + 1) % n);
    return g;
}

Graph subdivided_complete(int n) {
    if (n < 2) throw PreconditionError("subdivided_complete: n must be >= 2");
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    int next = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            g.add_edge_in_place(u, next);
            g.add_edge_in_place(next, v);
            ++next;
        }
    return g;
}

namespace {

int subdivide_random_edge(Graph& g, std::mt19937_64& rng, int fresh_id) {
    auto es = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
    auto [u, v] = es[pick(rng)];
    g.remove_edge_in_place(u, v);
    g.add_edge_in_place(u, fresh_id);
    g.add_edge_in_place(fresh_id, v);
    return fresh_id;
}

}  // namespace

Graph v8_subdivision(int extra, std::uint64_t seed) {
    if (extra < 0) throw PreconditionError("v8_subdivision: extra must be >= 0");
    Graph g = wagner_v8();
    std::mt19937_64 rng(seed);
    int next = 8;
    for (int i = 0; i < extra; ++i) subdivide_random_edge(g, rng, next++);
    return g;
}

Graph random_planar(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_planar: n must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge_in_place(v, pick(rng));
    }
    if (n < 3) return g;
    std::uniform_int_distribution<int> pick(0, n - 1);
    int attempts = 3 * n;
    for (int i = 0; i < attempts; ++i) {
        int u = pick(rng), v = pick(rng);
        if (u == v || g.has_edge(u, v)) continue;
        Graph h = add_edge(g, u, v);
        if (is_planar(h)) g = std::move(h);
    }
    return g;
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_tree: n must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g;
    g.add_vertex(0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge_in_place(v, pick(rng));
    }
    return g;
}

Graph random_series_parallel(int n, std::uint64_t seed) {
    if (n < 2) throw PreconditionError("random_series_parallel: n must be >= 2");
    std::mt19937_64 rng(seed);
    Graph g;
    g.add_edge_in_place(0, 1);
    int next = 2;
    while (static_cast<int>(g.vertex_count()) < n) {
        auto es = g.edges();
        std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
        auto [u, v] = es[pick(rng)];
        if (rng() & 1) {
            // series: subdivide uv
            g.remove_edge_in_place(u, v);
            g.add_edge_in_place(u, next);
            g.add_edge_in_place(next, v);
        } else {
            // parallel: a length-2 path alongside uv
            g.add_edge_in_place(u, next);
            g.add_edge_in_place(next, v);
        }
        ++next;
    }
    return g;
}

namespace {

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> ts;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.has_edge(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k)
                if (g.has_edge(vs[i], vs[k]) && g.has_edge(vs[j], vs[k]))
                    ts.push_back({vs[i], vs[j], vs[k]});
        }
    return ts;
}

Graph random_piece(std::mt19937_64& rng) {
    if (rng() % 3 == 0) return wagner_v8();
    std::uniform_int_distribution<int> size(4, 8);
    return random_planar(size(rng), rng());
}

std::vector<int> pick_clique(const Graph& g, int order, std::mt19937_64& rng) {
    if (order == 1) {
        auto vs = g.vertices();
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        return {vs[pick(rng)]};
    }
    if (order == 2) {
        auto es = g.edges();
        if (es.empty()) return {};
        std::uniform_int_distribution<std::size_t> pick(0, es.size() - 1);
        auto [u, v] = es[pick(rng)];
        return {u, v};
    }
    auto ts = triangles(g);
    if (ts.empty()) return {};
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
    auto t = ts[pick(rng)];
    return {t[0], t[1], t[2]};
}

}  // namespace

Graph clique_sum(int pieces, std::uint64_t seed) {
    if (pieces < 1) throw PreconditionError("clique_sum: pieces must be >= 1");
    std::mt19937_64 rng(seed);
    Graph g = random_piece(rng);
    for (int p = 1; p < pieces; ++p) {
        Graph piece = random_piece(rng);
        std::uniform_int_distribution<int> order_pick(1, 3);
        int order = order_pick(rng);
        std::vector<int> host, mine;
        for (; order >= 1; --order) {
            host = pick_clique(g, order, rng);
            mine = pick_clique(piece, order, rng);
            if (!host.empty() && !mine.empty()) break;
        }
        // relabel piece: glued vertices onto the host clique, rest fresh
        int next = g.vertices().back() + 1;
        std::map<int, int> relabel;
        for (std::size_t i = 0; i < mine.size(); ++i) relabel[mine[i]] = host[i];
        for (int v : piece.vertices())
            if (!relabel.count(v)) relabel[v] = next++;
        for (const auto& [u, v] : piece.edges()) {
            int a = relabel[u], b = relabel[v];
            if (!g.has_edge(a, b)) g.add_edge_in_place(a, b);
        }
    }
    return g;
}

Graph generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::Cycle:
            return cycle_graph(spec.n);
        case GenKind::V8:
            return wagner_v8();
        case GenKind::V8Subdivision:
            return v8_subdivision(spec.n > 8 ? spec.n - 8 : 0, spec.seed);
        case GenKind::SubdividedComplete:
            return subdivided_complete(spec.n);
        case GenKind::CliqueSum:
            return clique_sum(spec.pieces > 0 ? spec.pieces : 2, spec.seed);
        case GenKind::RandomPlanar:
            return random_planar(spec.n, spec.seed);
    }
    throw PreconditionError("generate: unknown kind");
}

namespace {

std::string iso_invariant(const Graph& g) {
    // sorted list of (degree, sorted neighbor degrees); cheap refinement key
    std::vector<std::string> rows;
    for (int v : g.vertices()) {
        std::vector<int> nd;
        for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        std::ostringstream os;
        os << g.degree(v) << ":";
        for (int d : nd) os << d << ",";
        rows.push_back(os.str());
    }
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) key += r + ";";
    return key;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int max_degree) {
    if (n < 1) throw PreconditionError("enumerate_connected: n must be >= 1");
    Graph empty;
    for (int v = 0; v < n; ++v) empty.add_vertex(v);
    std::vector<Graph> level{empty};
    std::vector<Graph> connected;
    if (n == 1) return level;

    while (!level.empty()) {
        for (const Graph& g : level)
            if (is_connected(g)) connected.push_back(g);
        std::map<std::string, std::vector<Graph>> next;
        for (const Graph& g : level) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    if (max_degree >= 0 && (g.degree(u) >= max_degree ||
                                            g.degree(v) >= max_degree))
                        continue;
                    Graph h = add_edge(g, u, v);
                    auto& bucket = next[iso_invariant(h)];
                    bool fresh = true;
                    for (const Graph& seen : bucket)
                        if (is_isomorphic(seen, h)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) bucket.push_back(std::move(h));
                }
        }
        level.clear();
        for (auto& [key, bucket] : next) {
            (void)key;
            for (Graph& g : bucket) level.push_back(std::move(g));
        }
    }
    return connected;
}

}  // namespace dyncolor
