#ifndef DYNCOLOR_IO_HPP
#define DYNCOLOR_IO_HPP

#include "dyncolor/coloring.hpp"
#include "dyncolor/graph.hpp"

#include <string>

namespace dyncolor {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Lines of "u v"; '#' starts a comment, blank lines ignored. Rejects loops,
/// duplicate edges and malformed tokens, reporting the line number.
Graph parse_edgelist(const std::string& text);

/// Canonical form: each edge once as "min max", sorted.
std::string emit_edgelist(const Graph& g);

/// Standard graph6, single-byte size header (n <= 62).
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

/// Structured coloring document: "k=<int>", then "vertex color" pairs sorted
/// by vertex, then optional "trace:" lines.
std::string emit_coloring(const Coloring& c,
                          const std::vector<std::string>& trace_lines = {});
Coloring parse_coloring(const std::string& text);

}  // namespace dyncolor

#endif
