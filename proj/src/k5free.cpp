#include "dyncolor/k5free.hpp"

#include "dyncolor/minor.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dyncolor {

const char* step_name(StepKind k) {
    switch (k) {
        case StepKind::Order1: return "Order1";
        case StepKind::Order2Case1: return "Order2Case1";
        case StepKind::Order2Case2: return "Order2Case2";
        case StepKind::Order3Case1: return "Order3Case1";
        case StepKind::Order3Case2: return "Order3Case2";
        case StepKind::Order3Case3: return "Order3Case3";
        case StepKind::PlanarBase: return "PlanarBase";
        case StepKind::V8Base: return "V8Base";
        case StepKind::C5Fallback: return "C5Fallback";
        case StepKind::OracleFallback: return "OracleFallback";
    }
    return "?";
}

std::vector<std::string> ReductionTrace::lines() const {
    std::vector<std::string> out;
    for (const auto& s : steps) {
        std::ostringstream os;
        os << step_name(s.kind);
        if (!s.cut.empty()) {
            os << " cut={";
            for (std::size_t i = 0; i < s.cut.size(); ++i)
                os << (i ? "," : "") << s.cut[i];
            os << "}";
        }
        os << " parent=(" << s.parent_vertices << "," << s.parent_edges << ")";
        if (!s.children.empty()) {
            os << " children=";
            for (std::size_t i = 0; i < s.children.size(); ++i)
                os << (i ? "," : "") << "(" << s.children[i].first << ","
                   << s.children[i].second << ")";
        }
        out.push_back(os.str());
    }
    return out;
}

namespace {

/// Color a C5 along its cycle starting at attach0; when attach1 is given it
/// must be adjacent to attach0 and becomes the last vertex of the order.
Coloring c5_table_coloring(const Graph& c5g, int attach0,
                           std::optional<int> attach1,
                           const std::array<int, 5>& pattern) {
    if (!is_c5(c5g)) throw InternalError("c5 table applied to a non-C5 graph");
    const auto& ns = c5g.neighbors(attach0);
    int first;
    if (attach1) {
        if (!c5g.has_edge(attach0, *attach1))
            throw InternalError("c5 table: attachments not adjacent");
        first = (*ns.begin() == *attach1) ? *ns.rbegin() : *ns.begin();
    } else {
        first = *ns.begin();
    }
    std::vector<int> order{attach0, first};
    while (order.size() < 5) {
        int cur = order.back(), prev = order[order.size() - 2];
        for (int w : c5g.neighbors(cur))
            if (w != prev) {
                order.push_back(w);
                break;
            }
    }
    Coloring c;
    c.k = 4;
    for (int i = 0; i < 5; ++i) c.assignment[order[i]] = pattern[i];
    return c;
}

struct K5FreeSolver {
    double time_limit;
    ReductionTrace trace;
    int logged_fallbacks = 0;

    TraceStep& record(StepKind kind, const Graph& parent,
                      const std::vector<int>& cut = {}) {
        trace.steps.push_back(
            {kind, cut, parent.vertex_count(), parent.edge_count(), {}});
        return trace.steps.back();
    }

    void record_child(TraceStep& step, const Graph& parent, const Graph& child) {
        if (child.edge_count() >= parent.edge_count())
            throw InternalError("recursive subproblem does not shrink");
        step.children.emplace_back(child.vertex_count(), child.edge_count());
    }

    /// Exhaustive search over the 24 color bijections: the first permutation
    /// (lexicographic) whose merged coloring is dynamic on g wins.
    Coloring merge_with_permutation(const Graph& g, const Coloring& c1,
                                    const Coloring& c2,
                                    const std::vector<int>& attachments,
                                    const char* what) {
        std::array<int, 5> perm{};  // perm[color] for colors 1..4
        std::vector<int> p{1, 2, 3, 4};
        do {
            for (int i = 0; i < 4; ++i) perm[i + 1] = p[i];
            bool ok = true;
            for (int a : attachments)
                if (perm[c2.assignment.at(a)] != c1.assignment.at(a)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            Coloring merged;
            merged.k = 4;
            merged.assignment = c1.assignment;
            for (const auto& [v, col] : c2.assignment)
                if (!merged.assignment.count(v)) merged.assignment[v] = perm[col];
            if (verify_dynamic(g, merged).ok) return merged;
        } while (std::next_permutation(p.begin(), p.end()));
        throw InternalError(std::string("no color permutation merges ") + what);
    }

    Coloring oracle_fallback(const Graph& g, const char* reason) {
        ++logged_fallbacks;
        auto& step = record(StepKind::OracleFallback, g);
        (void)step;
        (void)reason;
        auto c = solve_exact(g, 4, {}, time_limit);
        if (!c)
            throw InternalError(std::string("oracle fallback infeasible: ") + reason);
        return *c;
    }

    /// Recursive piece colorer: g connected, K5-minor-free, not C5.
    Coloring rec(const Graph& g) {
        if (is_c5(g))
            throw InternalError("recursion reached a bare C5 piece");

        // base: planar pieces and anything small enough for the oracle
        bool planar = is_planar(g);
        if (planar || g.vertex_count() <= 8) {
            bool v8 = !planar && is_isomorphic(g, wagner_v8());
            auto c = solve_exact(g, 4, {}, time_limit);
            if (!c)
                throw InternalError(
                    "base-case oracle found no dynamic 4-coloring; the input "
                    "may have a K5 minor");
            record(v8 ? StepKind::V8Base : StepKind::PlanarBase, g);
            return *c;
        }

        auto cuts = cut_vertices(g);
        if (!cuts.empty()) return split_order1(g, *cuts.begin());

        auto seps = enumerate_separations(g, 2);
        std::vector<Separation> wide;
        for (auto& s : seps) {
            std::set<int> x = s.intersection();
            if (s.a.size() - x.size() > 1 && s.b.size() - x.size() > 1)
                wide.push_back(std::move(s));
        }
        if (!wide.empty()) return split_order2(g, wide);

        return split_order3(g);
    }

    Coloring split_order1(const Graph& g, int v) {
        auto comps = components(remove_vertex(g, v));
        std::set<int> sa = comps.front();
        sa.insert(v);
        std::set<int> sb{v};
        for (std::size_t i = 1; i < comps.size(); ++i)
            sb.insert(comps[i].begin(), comps[i].end());
        Graph g1 = induced_subgraph(g, sa);
        Graph g2 = induced_subgraph(g, sb);
        if (is_c5(g1) && is_c5(g2))
            return oracle_fallback(g, "two C5 blocks (planar; unreachable)");
        if (is_c5(g2)) std::swap(g1, g2);  // the recursed side must not be C5

        auto& step = record(StepKind::Order1, g, {v});
        record_child(step, g, g1);
        record_child(step, g, g2);

        Coloring c2 = rec(g2);
        Coloring c1;
        if (is_c5(g1)) {
            record(StepKind::C5Fallback, g1, {v});
            c1 = c5_table_coloring(g1, v, std::nullopt, C5FallbackTable::order1);
        } else {
            c1 = rec(g1);
        }
        return merge_with_permutation(g, c1, c2, {v}, "an order-1 split");
    }

    // Orientation + |A|-minimizing selection for the order-2 machinery.
    std::optional<Separation> select_separation2(const Graph& g,
                                                 std::vector<Separation>& cands) {
        std::vector<Separation> oriented;
        for (const auto& s : cands) {
            auto x = s.intersection();
            auto it = x.begin();
            int xv = *it++, yv = *it;
            if (!is_planar(add_edge(induced_subgraph(g, s.a), xv, yv)))
                oriented.push_back(s);
            if (!is_planar(add_edge(induced_subgraph(g, s.b), xv, yv)))
                oriented.push_back({s.b, s.a});
        }
        if (oriented.empty()) return std::nullopt;
        std::sort(oriented.begin(), oriented.end(),
                  [](const Separation& l, const Separation& r) {
                      if (l.a.size() != r.a.size()) return l.a.size() < r.a.size();
                      if (l.a != r.a) return l.a < r.a;
                      return l.b < r.b;
                  });

        for (auto& s : oriented) {
            auto x = s.intersection();
            auto it = x.begin();
            int xv = *it++, yv = *it;
            // a degree-2 vertex in B\A seeing exactly {x,y} migrates to A
            for (int u : s.b) {
                if (x.count(u)) continue;
                if (g.neighbors(u) == x) {
                    s.a.insert(u);
                    s.b.erase(u);
                    break;
                }
            }
            if (order2_conditions_hold(g, s, xv, yv)) return s;
        }
        return std::nullopt;
    }

    bool order2_conditions_hold(const Graph& g, const Separation& s, int xv,
                                int yv) {
        std::set<int> cut{xv, yv};
        auto nbrs_in = [&](int v, const std::set<int>& side) {
            int n = 0;
            for (int w : g.neighbors(v))
                if (side.count(w)) ++n;
            return n;
        };
        if (nbrs_in(xv, s.a) < 2 || nbrs_in(yv, s.a) < 2) return false;  // (i)
        bool b_has_full = false, a_has_full = false;
        for (int u : s.b)
            if (!cut.count(u) && g.neighbors(u) == cut) b_has_full = true;
        for (int u : s.a)
            if (!cut.count(u) && g.neighbors(u) == cut) a_has_full = true;
        if (b_has_full && !g.has_edge(xv, yv) && !a_has_full) return false;  // (ii)
        return true;
    }

    Coloring split_order2(const Graph& g, std::vector<Separation>& wide) {
        auto sep = select_separation2(g, wide);
        if (!sep)
            return oracle_fallback(g, "no order-2 separation meets the lemma conditions");
        auto cut = sep->intersection();
        auto it = cut.begin();
        int xv = *it++, yv = *it;

        Graph g1 = induced_subgraph(g, sep->a);
        Graph gb = induced_subgraph(g, sep->b);
        if (is_c5(g1))
            return oracle_fallback(g, "nonplanar-side piece is C5 (unreachable)");
        Coloring c1 = rec(g1);

        int cx = c1.assignment.at(xv), cy = c1.assignment.at(yv);
        if (cx != cy) {
            // Case 1: color G[B]+xy and pin both attachment colors
            Graph aux = add_edge(gb, xv, yv);
            auto& step = record(StepKind::Order2Case1, g, {xv, yv});
            record_child(step, g, g1);
            record_child(step, g, aux);
            Coloring c2;
            if (is_c5(aux)) {
                record(StepKind::C5Fallback, aux, {xv, yv});
                c2 = c5_table_coloring(aux, xv, yv, C5FallbackTable::order2_case1);
            } else {
                c2 = rec(aux);
            }
            return merge_with_permutation(g, c1, c2, {xv, yv},
                                          "an order-2 case-1 split");
        }

        // Case 2: c1(x) = c1(y); the lemma's condition (ii) rules out a
        // B-side vertex whose whole neighborhood is {x,y}
        for (int u : sep->b)
            if (!cut.count(u) && g.neighbors(u) == cut)
                throw InternalError(
                    "order-2 case 2 entered with a B-side vertex pendant on "
                    "the cut (condition (ii) violated)");
        Graph aux = contract_edge(add_edge(gb, xv, yv), xv, yv);
        int merged = std::min(xv, yv);
        auto& step = record(StepKind::Order2Case2, g, {xv, yv});
        record_child(step, g, g1);
        record_child(step, g, aux);
        Coloring caux;
        if (is_c5(aux)) {
            record(StepKind::C5Fallback, aux, {merged});
            caux = c5_table_coloring(aux, merged, std::nullopt,
                                     C5FallbackTable::order2_case2);
        } else {
            caux = rec(aux);
        }
        Coloring c2;
        c2.k = 4;
        for (int u : sep->b)
            c2.assignment[u] = caux.assignment.at(u == xv || u == yv ? merged : u);
        return merge_with_permutation(g, c1, c2, {xv, yv},
                                      "an order-2 case-2 split");
    }

    // -- order 3: Halin trichotomy on the suppressed graph ------------------

    Coloring split_order3(const Graph& g) {
        // internally 3-connected, nonplanar, |V| > 8 here; cycles are planar
        SuppressionMap sm = suppress_degree_two(g);
        HalinVerdict verdict = classify_3connected(sm.suppressed);
        if (verdict.tag == HalinTag::Planar)
            return oracle_fallback(g, "suppressed graph classified planar");
        if (verdict.tag == HalinTag::IsV8) {
            auto c = solve_exact(g, 4, {}, time_limit);
            if (!c)
                throw InternalError(
                    "V8-subdivision base has no dynamic 4-coloring");
            record(StepKind::V8Base, g);
            return *c;
        }

        // lift the 3-cut from the suppressed graph through branch_map
        std::set<int> cut3;
        for (int v : *verdict.cut) cut3.insert(sm.branch_map.at(v));
        auto sep = lift_three_cut(g, cut3);
        if (!sep)
            return oracle_fallback(g, "no component choice meets the order-3 conditions");
        return merge_order3(g, *sep, cut3);
    }

    std::optional<Separation> lift_three_cut(const Graph& g,
                                             const std::set<int>& x3) {
        Graph rest = g;
        for (int v : x3) rest.remove_vertex_in_place(v);
        auto comps = components(rest);
        int busy = 0;
        for (const auto& c : comps) {
            for (int v : c)
                if (g.degree(v) > 2) {
                    ++busy;
                    break;
                }
        }
        if (busy < 3) return std::nullopt;

        // paper's order: a component with more than one vertex first, then a
        // singleton of degree 3
        std::vector<std::set<int>> candidates;
        for (const auto& c : comps)
            if (c.size() > 1) candidates.push_back(c);
        for (const auto& c : comps)
            if (c.size() == 1 && g.degree(*c.begin()) == 3) candidates.push_back(c);

        for (const auto& c : candidates) {
            Separation s;
            s.b = x3;
            s.b.insert(c.begin(), c.end());
            for (int v : g.vertices())
                if (!c.count(v)) s.a.insert(v);
            if (order3_conditions_hold(g, s, x3)) return s;
        }
        return std::nullopt;
    }

    bool order3_conditions_hold(const Graph& g, const Separation& s,
                                const std::set<int>& cut) {
        auto nbrs_in = [&](int v, const std::set<int>& side) {
            int n = 0;
            for (int w : g.neighbors(v))
                if (side.count(w)) ++n;
            return n;
        };
        for (int v : cut)
            if (nbrs_in(v, s.a) < 2) return false;  // (i)
        int heavy = 0;
        for (int v : s.a)
            if (!cut.count(v) && g.degree(v) > 2) ++heavy;
        if (heavy < 2) return false;  // (ii)
        for (int u : s.b) {           // (iii)
            if (cut.count(u)) continue;
            const auto& nu = g.neighbors(u);
            bool only_cut = true;
            for (int w : nu)
                if (!cut.count(w)) only_cut = false;
            if (!only_cut) continue;
            bool adjacent_pair = false;
            for (int a : nu)
                for (int b : nu)
                    if (a < b && g.has_edge(a, b)) adjacent_pair = true;
            bool twin_in_a = false;
            for (int v : s.a)
                if (!cut.count(v) && g.neighbors(v) == nu) twin_in_a = true;
            if (!adjacent_pair && !twin_in_a) return false;
        }
        if (!is_connected(induced_subgraph(g, s.a))) return false;
        return true;
    }

    Coloring merge_order3(const Graph& g, const Separation& sep,
                          const std::set<int>& cut) {
        Graph g1 = induced_subgraph(g, sep.a);
        Graph gb = induced_subgraph(g, sep.b);
        if (is_c5(g1))
            return oracle_fallback(g, "order-3 A-side is C5 (condition (ii) violated)");
        Coloring c1 = rec(g1);

        std::vector<int> xs(cut.begin(), cut.end());
        int cx = c1.assignment.at(xs[0]), cy = c1.assignment.at(xs[1]),
            cz = c1.assignment.at(xs[2]);

        if (cx != cy && cy != cz && cx != cz) {
            // Case 1: make the cut a triangle on the B side
            Graph aux = add_edge(add_edge(add_edge(gb, xs[0], xs[1]), xs[1], xs[2]),
                                 xs[0], xs[2]);
            auto& step = record(StepKind::Order3Case1, g, xs);
            record_child(step, g, g1);
            record_child(step, g, aux);
            Coloring c2 = rec(aux);  // contains a triangle, never C5
            return merge_with_permutation(g, c1, c2, xs,
                                          "an order-3 case-1 split");
        }

        if (cx == cy && cy == cz) {
            // Case 3: condition (iii) forbids a B-side vertex seeing only the cut
            for (int u : sep.b) {
                if (cut.count(u)) continue;
                bool only_cut = true;
                for (int w : g.neighbors(u))
                    if (!cut.count(w)) only_cut = false;
                if (only_cut)
                    throw InternalError(
                        "order-3 case 3 entered with a B-side vertex seeing "
                        "only the cut (condition (iii) violated)");
            }
            Graph aux0 = add_edge(add_edge(gb, xs[0], xs[1]), xs[1], xs[2]);
            Graph aux1 = contract_edge(aux0, xs[0], xs[1]);
            int m1 = std::min(xs[0], xs[1]);
            Graph aux = contract_edge(aux1, m1, xs[2]);
            int m2 = std::min(m1, xs[2]);
            auto& step = record(StepKind::Order3Case3, g, xs);
            record_child(step, g, g1);
            record_child(step, g, aux);
            Coloring caux;
            if (is_c5(aux)) {
                record(StepKind::C5Fallback, aux, {m2});
                caux = c5_table_coloring(aux, m2, std::nullopt,
                                         C5FallbackTable::order3_case3);
            } else {
                caux = rec(aux);
            }
            Coloring c2;
            c2.k = 4;
            for (int u : sep.b)
                c2.assignment[u] = caux.assignment.at(cut.count(u) ? m2 : u);
            return merge_with_permutation(g, c1, c2, xs,
                                          "an order-3 case-3 split");
        }

        // Case 2: exactly one equal pair (p,q); r keeps its own color
        int p, q, r;
        if (cx == cy) {
            p = xs[0]; q = xs[1]; r = xs[2];
        } else if (cy == cz) {
            p = xs[1]; q = xs[2]; r = xs[0];
        } else {
            p = xs[0]; q = xs[2]; r = xs[1];
        }
        Graph aux0 = add_edge(add_edge(gb, p, q), q, r);
        Graph aux = contract_edge(aux0, p, q);
        int merged = std::min(p, q);
        auto& step = record(StepKind::Order3Case2, g, xs);
        record_child(step, g, g1);
        record_child(step, g, aux);
        Coloring caux;
        if (is_c5(aux)) {
            record(StepKind::C5Fallback, aux, {merged, r});
            caux = c5_table_coloring(aux, merged, r, C5FallbackTable::order3_case2);
        } else {
            caux = rec(aux);
        }
        Coloring c2;
        c2.k = 4;
        for (int u : sep.b)
            c2.assignment[u] = caux.assignment.at(u == p || u == q ? merged : u);
        return merge_with_permutation(g, c1, c2, xs, "an order-3 case-2 split");
    }
};

}  // namespace

K5FreeResult color_k5free(const Graph& g, double time_limit_secs) {
    if (g.vertex_count() == 0)
        throw PreconditionError("color_k5free: empty graph");
    if (!is_connected(g))
        throw PreconditionError("color_k5free: graph must be connected");
    if (is_c5(g))
        throw NotColorableError("C5 has no dynamic 4-coloring");
    if (g.vertex_count() <= 12 && has_minor(g, complete_graph(5)))
        throw PreconditionError("color_k5free: input has a K5 minor");

    K5FreeSolver solver;
    solver.time_limit = time_limit_secs;
    K5FreeResult res;
    res.coloring = solver.rec(g);
    res.trace = std::move(solver.trace);
    res.logged_fallbacks = solver.logged_fallbacks;

    auto report = verify_dynamic(g, res.coloring);
    if (!report.ok)
        throw InternalError("final coloring failed verification");
    return res;
}

}  // namespace dyncolor
