#ifndef DYNCOLOR_GENERATE_HPP
#define DYNCOLOR_GENERATE_HPP

#include "dyncolor/graph.hpp"

#include <cstdint>
#include <random>

namespace dyncolor {

enum class GenKind {
    Cycle,
    V8,
    V8Subdivision,
    SubdividedComplete,
    CliqueSum,
    RandomPlanar,
};

/// Seed-deterministic generator request.
struct GenSpec {
    GenKind kind;
    int n = 0;           // cycle length / K_n order / target size
    int pieces = 0;      // clique_sum piece count
    std::uint64_t seed = 0;
};

Graph generate(const GenSpec& spec);

Graph cycle_graph(int n);
/// K_n with every edge subdivided once.
Graph subdivided_complete(int n);
/// V8 with extra subdivision vertices inserted on random edges.
Graph v8_subdivision(int extra, std::uint64_t seed);
/// Random planar graph grown by edge insertion subject to is_planar.
Graph random_planar(int n, std::uint64_t seed);
/// Clique-sum (orders 1-3) of random planar pieces and V8 copies; always
/// K5-minor-free by Wagner's characterization.
Graph clique_sum(int pieces, std::uint64_t seed);

/// Test-corpus helpers.
Graph random_tree(int n, std::uint64_t seed);
Graph random_series_parallel(int n, std::uint64_t seed);

/// All connected graphs on exactly n vertices up to isomorphism, optionally
/// capped at a maximum degree. Iterated edge addition with isomorphism
/// rejection; desk scale (n <= 9).
std::vector<Graph> enumerate_connected(int n, int max_degree = -1);

}  // namespace dyncolor

#endif
