#include "dyncolor/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>

namespace dyncolor {

bool Coloring::is_total_on(const Graph& g) const {
    for (int v : g.vertices())
        if (!assignment.count(v)) return false;
    return true;
}

int Coloring::colors_used() const {
    std::set<int> cs;
    for (const auto& [v, c] : assignment) {
        (void)v;
        cs.insert(c);
    }
    return static_cast<int>(cs.size());
}

bool is_happy(const Graph& g, const Coloring& c, int v) {
    const auto& ns = g.neighbors(v);
    if (ns.size() <= 1) return true;
    int seen = 0;
    for (int w : ns) {
        auto it = c.assignment.find(w);
        if (it == c.assignment.end())
            throw PreconditionError("is_happy: uncolored neighbor");
        if (seen == 0) {
            seen = it->second;
        } else if (it->second != seen) {
            return true;
        }
    }
    return false;
}

HappyReport verify_dynamic(const Graph& g, const Coloring& c) {
    HappyReport r;
    bool total = c.is_total_on(g);
    for (const auto& [v, col] : c.assignment)
        if (col < 1 || col > c.k) total = false;  // out-of-range counts as bad
    for (const auto& [u, v] : g.edges()) {
        auto iu = c.assignment.find(u), iv = c.assignment.find(v);
        if (iu != c.assignment.end() && iv != c.assignment.end() &&
            iu->second == iv->second)
            r.proper_violations.emplace_back(u, v);
    }
    if (total) {
        for (int v : g.vertices())
            if (!is_happy(g, c, v)) r.unhappy.push_back(v);
    }
    r.ok = total && r.proper_violations.empty() && r.unhappy.empty();
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Solver {
    const Graph* g;
    int k;
    bool dynamic;  // happiness pruning on
    std::vector<int> order;            // vertices, descending degree
    std::map<int, int> color;          // current partial assignment
    std::map<int, bool> fixed;
    Clock::time_point deadline;
    bool has_deadline = false;
    long nodes = 0;

    bool consistent_after(int v) {
        // proper check against colored neighbors
        int cv = color[v];
        for (int w : g->neighbors(v)) {
            auto it = color.find(w);
            if (it != color.end() && it->second == cv) return false;
        }
        // happiness prune: any vertex whose whole neighborhood just became
        // colored must not be monochromatically surrounded
        if (!dynamic) return true;
        auto doomed = [&](int u) {
            const auto& ns = g->neighbors(u);
            if (ns.size() <= 1) return false;
            int seen = 0;
            for (int w : ns) {
                auto it = color.find(w);
                if (it == color.end()) return false;  // still open
                if (seen == 0)
                    seen = it->second;
                else if (it->second != seen)
                    return false;
            }
            return true;
        };
        if (doomed(v)) return false;
        for (int u : g->neighbors(v))
            if (doomed(u)) return false;
        return true;
    }

    bool search(std::size_t i) {
        if (has_deadline && (nodes++ & 1023) == 0 && Clock::now() > deadline)
            throw SolverTimeout("exact solver exceeded its time limit");
        if (i == order.size()) return true;
        int v = order[i];
        if (fixed[v]) {
            if (!consistent_after(v)) return false;
            return search(i + 1);
        }
        for (int c = 1; c <= k; ++c) {
            color[v] = c;
            if (consistent_after(v) && search(i + 1)) return true;
            color.erase(v);
        }
        return false;
    }
};

std::optional<Coloring> run_solver(const Graph& g, int k, const Coloring& pre,
                                   bool dynamic, double time_limit_secs) {
    if (k < 1) return std::nullopt;
    for (const auto& [v, c] : pre.assignment) {
        if (c < 1 || c > k)
            throw PreconditionError("solve_exact: precoloring outside {1..k}");
        if (!g.has_vertex(v))
            throw PreconditionError("solve_exact: precolored vertex not in graph");
    }
    Solver s;
    s.g = &g;
    s.k = k;
    s.dynamic = dynamic;
    s.order = g.vertices();
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        int da = g.degree(a), db = g.degree(b);
        return da != db ? da > db : a < b;
    });
    for (int v : s.order) s.fixed[v] = false;
    for (const auto& [v, c] : pre.assignment) {
        s.color[v] = c;
        s.fixed[v] = true;
    }
    if (time_limit_secs > 0) {
        s.has_deadline = true;
        s.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(time_limit_secs));
    }
    if (!s.search(0)) return std::nullopt;
    Coloring out;
    out.k = k;
    out.assignment = s.color;
    return out;
}

int greedy_clique(const Graph& g) {
    // vertices by descending degree; grow a clique greedily
    auto vs = g.vertices();
    std::stable_sort(vs.begin(), vs.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::set<int> clique;
    for (int v : vs) {
        bool all = true;
        for (int w : clique)
            if (!g.has_edge(v, w)) all = false;
        if (all) clique.insert(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

std::optional<Coloring> solve_exact(const Graph& g, int k, const Coloring& pre,
                                    double time_limit_secs) {
    return run_solver(g, k, pre, true, time_limit_secs);
}

std::optional<Coloring> solve_proper(const Graph& g, int k,
                                     double time_limit_secs) {
    return run_solver(g, k, {}, false, time_limit_secs);
}

int chi_d(const Graph& g, double time_limit_secs) {
    if (g.vertex_count() == 0) return 0;
    for (int k = std::max(1, greedy_clique(g));; ++k)
        if (solve_exact(g, k, {}, time_limit_secs)) return k;
}

int chi(const Graph& g, double time_limit_secs) {
    if (g.vertex_count() == 0) return 0;
    for (int k = std::max(1, greedy_clique(g));; ++k)
        if (solve_proper(g, k, time_limit_secs)) return k;
}

double default_time_limit() {
    if (const char* env = std::getenv("DYNCOLOR_TIME_LIMIT_SECS")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v >= 0) return v;
    }
    return 60.0;
}

}  // namespace dyncolor
