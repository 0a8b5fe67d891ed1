#ifndef DYNCOLOR_SWEEP_HPP
#define DYNCOLOR_SWEEP_HPP

#include "dyncolor/graph.hpp"

#include <string>
#include <vector>

namespace dyncolor {

struct SweepReport {
    std::size_t total = 0;        // corpus entries considered
    std::size_t filtered = 0;     // dropped: disconnected or has a K5 minor
    std::size_t skipped_c5 = 0;   // C5, correctly not 4-colorable
    std::size_t colored = 0;      // verified 4-colorings produced
    int fallbacks = 0;            // condition-check oracle fallbacks logged
    double max_runtime_secs = 0;  // slowest single graph
    std::vector<std::string> failures;  // graph6 of any offender

    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

/// Runs color_k5free over every connected K5-minor-free graph other than C5
/// in the corpus, verifies each result, and cross-checks 4-color feasibility
/// against the exact solver. Entries are processed in graph6 order.
SweepReport sweep_compare(const std::vector<Graph>& corpus);

/// Exhaustive sweep over all connected graphs with 1 <= n <= max_n.
/// Requires max_n <= 8.
SweepReport sweep_compare(int max_n);

}  // namespace dyncolor

#endif
