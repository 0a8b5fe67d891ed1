#include "dyncolor/sweep.hpp"

#include "dyncolor/coloring.hpp"
#include "dyncolor/generate.hpp"
#include "dyncolor/io.hpp"
#include "dyncolor/k5free.hpp"
#include "dyncolor/minor.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace dyncolor {

std::string SweepReport::summary() const {
    std::ostringstream os;
    os << "total=" << total << " filtered=" << filtered
       << " skipped_c5=" << skipped_c5 << " colored=" << colored
       << " fallbacks=" << fallbacks << " failures=" << failures.size()
       << " max_runtime_secs=" << max_runtime_secs;
    return os.str();
}

SweepReport sweep_compare(const std::vector<Graph>& corpus) {
    // deterministic aggregation: process in graph6 order
    std::vector<std::pair<std::string, const Graph*>> order;
    order.reserve(corpus.size());
    for (const Graph& g : corpus) order.emplace_back(emit_graph6(g), &g);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const Graph k5 = complete_graph(5);
    SweepReport rep;
    for (const auto& [g6, gp] : order) {
        const Graph& g = *gp;
        ++rep.total;
        if (g.vertex_count() == 0 || !is_connected(g) || has_minor(g, k5)) {
            ++rep.filtered;
            continue;
        }
        if (is_c5(g)) {
            ++rep.skipped_c5;
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        try {
            K5FreeResult res = color_k5free(g);
            rep.fallbacks += res.logged_fallbacks;
            if (!verify_dynamic(g, res.coloring).ok ||
                res.coloring.colors_used() > 4) {
                rep.failures.push_back(g6);
            } else if (!solve_exact(g, 4, {}, default_time_limit())) {
                // constructive success must agree with exact feasibility
                rep.failures.push_back(g6);
            } else {
                ++rep.colored;
            }
        } catch (const std::exception&) {
            rep.failures.push_back(g6);
        }
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        rep.max_runtime_secs = std::max(rep.max_runtime_secs, secs);
    }
    return rep;
}

SweepReport sweep_compare(int max_n) {
    if (max_n < 1 || max_n > 8)
        throw PreconditionError("sweep_compare: exhaustive mode needs 1 <= max_n <= 8");
    std::vector<Graph> corpus;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : enumerate_connected(n)) corpus.push_back(std::move(g));
    return sweep_compare(corpus);
}

}  // namespace dyncolor
