#include "dyncolor/budget.hpp"

#include "dyncolor/k5free.hpp"
#include "dyncolor/minor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

namespace dyncolor {

int budget(BudgetMode mode, int t) {
    if (t < 2) throw PreconditionError("budget: t must be >= 2");
    if (mode == BudgetMode::TopologicalMinor) return 10 * t * t + 2;
    // floor(16t*sqrt(log2 t)) with a guard band against rounding at the
    // boundary (exact only at t = 2)
    long double x = 16.0L * t * sqrtl(log2l(static_cast<long double>(t)));
    return static_cast<int>(floorl(x + 1e-9L)) + 3;
}

namespace {

int smallest_color_not_in(const std::set<int>& forbidden, int palette) {
    for (int c = 1; c <= palette; ++c)
        if (!forbidden.count(c)) return c;
    throw InternalError("no free color in the palette");
}

struct DegenerateSolver {
    int k;
    int palette;

    std::map<int, int> color_any(const Graph& g) {
        std::map<int, int> out;
        for (const auto& comp : components(g)) {
            auto sub = rec(induced_subgraph(g, comp));
            out.insert(sub.begin(), sub.end());
        }
        return out;
    }

    std::map<int, int> rec(const Graph& g) {
        if (g.vertex_count() == 1) return {{g.vertices().front(), 1}};

        int v = -1, d = -1;
        for (int u : g.vertices()) {
            int du = g.degree(u);
            if (d < 0 || du < d) {
                v = u;
                d = du;
            }
        }
        if (d > k) throw DegeneracyViolation(g);

        auto ns = g.neighbors(v);
        std::vector<int> nbr(ns.begin(), ns.end());

        if (d == 1) {
            int v1 = nbr[0];
            auto c1 = rec(remove_vertex(g, v));
            std::set<int> forbidden{c1.at(v1)};
            for (int w : g.neighbors(v1))
                if (w != v) {
                    forbidden.insert(c1.at(w));
                    break;
                }
            c1[v] = smallest_color_not_in(forbidden, palette);
            return c1;
        }

        if (d == 2) {
            int v1 = nbr[0], v2 = nbr[1];
            int w1 = other_neighbor(g, v1, v);
            int w2 = other_neighbor(g, v2, v);
            Graph g1 = contract_edge(g, v, v1);
            int m = std::min(v, v1);
            auto c1 = rec(g1);
            auto look = [&](int u) { return c1.at(u == v1 ? m : u); };
            std::set<int> forbidden{look(v1), look(v2)};
            if (w1 >= 0) forbidden.insert(look(w1));
            if (w2 >= 0) forbidden.insert(look(w2));
            int f = smallest_color_not_in(forbidden, palette);
            std::map<int, int> out;
            for (const auto& [u, col] : c1) out[u == m ? v1 : u] = col;
            out[v] = f;
            return out;
        }

        // minimum degree >= 3: remove v, tie two of its neighbors together
        int v1 = nbr[0], v2 = nbr[1];
        int w1 = other_neighbor(g, v1, v);
        int w2 = other_neighbor(g, v2, v);
        Graph g1 = add_edge(remove_vertex(g, v), v1, v2);
        auto c1 = color_any(g1);
        std::set<int> forbidden;
        for (int u : nbr) forbidden.insert(c1.at(u));
        if (w1 >= 0) forbidden.insert(c1.at(w1));
        if (w2 >= 0) forbidden.insert(c1.at(w2));
        // |forbidden| <= d+2 <= k+2 < k+3, so a color always remains
        c1[v] = smallest_color_not_in(forbidden, palette);
        return c1;
    }

    // smallest neighbor of u other than avoid, or -1 when none exists
    static int other_neighbor(const Graph& g, int u, int avoid) {
        for (int w : g.neighbors(u))
            if (w != avoid) return w;
        return -1;
    }
};

}  // namespace

Coloring color_degenerate(const Graph& g, int k) {
    if (k < 1) throw PreconditionError("color_degenerate: k must be >= 1");
    if (g.vertex_count() == 0)
        throw PreconditionError("color_degenerate: empty graph");
    if (!is_connected(g))
        throw PreconditionError("color_degenerate: graph must be connected");
    DegenerateSolver s;
    s.k = k;
    s.palette = k + 3;
    Coloring c;
    c.k = k + 3;
    c.assignment = s.rec(g);
    if (!verify_dynamic(g, c).ok)
        throw InternalError("degeneracy coloring failed verification");
    return c;
}

namespace {

struct ApexSolver {
    double time_limit;

    std::map<int, int> planar_base(const Graph& g, int palette) {
        auto c = solve_exact(g, 4, {}, time_limit);
        if (!c && palette >= 5) c = solve_exact(g, 5, {}, time_limit);
        if (!c) throw InternalError("planar base piece is not colorable in budget");
        return c->assignment;
    }

    /// All ten table placements of the 1,2,3,4,2 pattern around a C5; the
    /// single possibly-unhappy vertex is the start of each walk.
    std::vector<std::map<int, int>> c5_placements(const Graph& c5g) {
        std::vector<std::map<int, int>> out;
        static const std::array<int, 5> pattern{1, 2, 3, 4, 2};
        for (int start : c5g.vertices()) {
            for (int first : c5g.neighbors(start)) {
                std::vector<int> order{start, first};
                while (order.size() < 5) {
                    int cur = order.back(), prev = order[order.size() - 2];
                    for (int w : c5g.neighbors(cur))
                        if (w != prev) {
                            order.push_back(w);
                            break;
                        }
                }
                std::map<int, int> c;
                for (int i = 0; i < 5; ++i) c[order[i]] = pattern[i];
                out.push_back(std::move(c));
            }
        }
        return out;
    }

    std::map<int, int> rec(const Graph& g, std::set<int> x) {
        // colors the caller's budget permits, before any shrinking
        int allow = static_cast<int>(x.size()) + 4;
        // drop apex vertices whose retention keeps the rest planar
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (int v : x) {
                Graph rest = g;
                for (int u : x)
                    if (u != v) rest.remove_vertex_in_place(u);
                if (is_planar(rest)) {
                    x.erase(v);
                    shrunk = true;
                    break;
                }
            }
        }
        int palette = static_cast<int>(x.size()) + 4;

        if (x.empty()) {
            // C5 needs a fifth color; legal whenever the entry budget had an
            // apex vertex to spare
            if (is_c5(g) && allow < 5)
                throw PreconditionError("color_apex: planar piece is C5 with no apex budget");
            return planar_base(g, allow);
        }

        int v = *x.begin();
        std::set<int> xrest(std::next(x.begin()), x.end());

        Graph gv = remove_vertex(g, v);
        std::map<int, int> c1;
        std::vector<std::vector<std::map<int, int>>> c5opts;
        for (const auto& comp : components(gv)) {
            Graph piece = induced_subgraph(gv, comp);
            std::set<int> xi;
            for (int u : xrest)
                if (comp.count(u)) xi.insert(u);
            if (xi.empty() && is_c5(piece)) {
                c5opts.push_back(c5_placements(piece));
            } else {
                auto sub = rec(piece, xi);
                c1.insert(sub.begin(), sub.end());
            }
        }

        // try every C5-component placement combination (usually none exist)
        std::vector<std::size_t> idx(c5opts.size(), 0);
        while (true) {
            std::map<int, int> base = c1;
            for (std::size_t i = 0; i < c5opts.size(); ++i)
                base.insert(c5opts[i][idx[i]].begin(), c5opts[i][idx[i]].end());
            if (auto out = extend(g, v, base, palette)) return *out;
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < c5opts[i].size()) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
        throw InternalError("apex extension failed for every candidate");
    }

    /// Candidate extensions in the proof's order: fresh color on v; fresh
    /// color pushed onto a neighbor; recolored low-degree neighbor.
    std::optional<std::map<int, int>> extend(const Graph& g, int v,
                                             const std::map<int, int>& c1,
                                             int palette) {
        auto check = [&](std::map<int, int> cand) -> std::optional<std::map<int, int>> {
            Coloring c;
            c.k = palette;
            c.assignment = cand;
            if (verify_dynamic(g, c).ok) return cand;
            return std::nullopt;
        };
        {
            auto cand = c1;
            cand[v] = palette;
            if (auto r = check(cand)) return r;
        }
        std::vector<int> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
        for (int w : nbrs)
            for (int beta = 1; beta < palette; ++beta) {
                auto cand = c1;
                cand[v] = beta;
                cand[w] = palette;
                if (auto r = check(cand)) return r;
            }
        for (int w : nbrs)
            for (int d2 = 1; d2 < palette; ++d2) {
                auto cand = c1;
                cand[v] = palette;
                cand[w] = d2;
                if (auto r = check(cand)) return r;
            }
        return std::nullopt;
    }
};

}  // namespace

Coloring color_apex(const Graph& g, const std::set<int>& x,
                    double time_limit_secs) {
    if (g.vertex_count() == 0) throw PreconditionError("color_apex: empty graph");
    for (int v : x)
        if (!g.has_vertex(v))
            throw PreconditionError("color_apex: apex vertex not in graph");
    {
        Graph rest = g;
        for (int v : x) rest.remove_vertex_in_place(v);
        if (rest.vertex_count() > 0 && !is_planar(rest))
            throw PreconditionError("color_apex: g \\ X is not planar");
    }
    ApexSolver s;
    s.time_limit = time_limit_secs;
    Coloring c;
    c.k = static_cast<int>(x.size()) + 4;
    for (const auto& comp : components(g)) {
        std::set<int> xi;
        for (int v : x)
            if (comp.count(v)) xi.insert(v);
        auto sub = s.rec(induced_subgraph(g, comp), xi);
        c.assignment.insert(sub.begin(), sub.end());
    }
    if (!verify_dynamic(g, c).ok)
        throw InternalError("apex coloring failed verification");
    return c;
}

Coloring color_no_kt(const Graph& g, BudgetMode mode, int t) {
    return color_degenerate(g, budget(mode, t) - 3);
}

}  // namespace dyncolor
