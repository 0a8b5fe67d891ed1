#include "dyncolor/io.hpp"

#include <sstream>

namespace dyncolor {

namespace {

std::string at_line(int n, const std::string& what) {
    return "line " + std::to_string(n) + ": " + what;
}

}  // namespace

Graph parse_edgelist(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only
        if (!(ls >> v)) throw ParseError(at_line(lineno, "expected two vertex ids"));
        std::string extra;
        if (ls >> extra) throw ParseError(at_line(lineno, "trailing token '" + extra + "'"));
        if (u < 0 || v < 0) throw ParseError(at_line(lineno, "negative vertex id"));
        if (u == v) throw ParseError(at_line(lineno, "loop edge"));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(at_line(lineno, "duplicate edge"));
        g.add_edge_in_place(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string emit_edgelist(const Graph& g) {
    std::ostringstream os;
    for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
    for (int v : g.vertices())
        if (g.degree(v) == 0) os << "# isolated " << v << "\n";
    return os.str();
}

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty input");
    for (char ch : s)
        if (ch < 63 || ch > 126)
            throw ParseError("graph6: byte out of range [63,126]");
    int n = s[0] - 63;
    if (n == 63) throw ParseError("graph6: multi-byte sizes (n > 62) not supported");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() != 1 + nbytes)
        throw ParseError("graph6: wrong length for n=" + std::to_string(n));
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex(v);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if (byte >> (5 - bit % 6) & 1) g.add_edge_in_place(i, j);
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    auto vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n > 62) throw ParseError("graph6: n > 62 not supported");
    std::map<int, int> rank;
    for (int i = 0; i < n; ++i) rank[vs[i]] = i;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> bytes((nbits + 5) / 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(vs[i], vs[j])) bytes[bit / 6] |= 1 << (5 - bit % 6);
        }
    }
    std::string s;
    s.push_back(static_cast<char>(63 + n));
    for (int b : bytes) s.push_back(static_cast<char>(63 + b));
    return s;
}

std::string emit_coloring(const Coloring& c,
                          const std::vector<std::string>& trace_lines) {
    std::ostringstream os;
    os << "k=" << c.k << "\n";
    for (const auto& [v, col] : c.assignment) os << v << " " << col << "\n";
    if (!trace_lines.empty()) {
        os << "trace:\n";
        for (const auto& l : trace_lines) os << l << "\n";
    }
    return os.str();
}

Coloring parse_coloring(const std::string& text) {
    Coloring c;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_k = false, in_trace = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line == "trace:") {
            in_trace = true;
            continue;
        }
        if (in_trace) continue;
        if (!have_k) {
            if (line.rfind("k=", 0) != 0)
                throw ParseError(at_line(lineno, "expected k=<int> header"));
            c.k = std::stoi(line.substr(2));
            have_k = true;
            continue;
        }
        std::istringstream ls(line);
        int v, col;
        if (!(ls >> v >> col))
            throw ParseError(at_line(lineno, "expected 'vertex color'"));
        if (c.assignment.count(v))
            throw ParseError(at_line(lineno, "vertex colored twice"));
        c.assignment[v] = col;
    }
    if (!have_k) throw ParseError("coloring: missing k=<int> header");
    return c;
}

}  // namespace dyncolor
