#pragma once

#include <degencount/graph.hpp>
#include <degencount/pattern.hpp>

#include <cstdint>
#include <random>

namespace degencount {

using Rng = std::mt19937_64;

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

Graph random_gnp(std::size_t n, double p, Rng & rng);
/// Uniform random labelled tree (Prüfer sequence).
Graph random_tree(std::size_t n, Rng & rng);
/// Vertex i picks up to kappa distinct neighbours among 0..i-1, so the
/// result is kappa-degenerate.
Graph random_degenerate(std::size_t n, std::size_t kappa, Rng & rng);
/// Random simple 3-regular graph on r vertices (r even), pairing model with
/// restarts.
Graph random_cubic(std::size_t r, Rng & rng);
/// Benchmark host: random cubic graph with every edge subdivided once. The
/// cubic part has about n / 2.5 vertices (rounded to even), so the result
/// has about n vertices and degeneracy 2.
Graph degen2_host(std::size_t n, std::uint64_t seed);

/// Random connected graph on n vertices: random tree plus G(n,p) edges.
Pattern random_connected_pattern(std::size_t n, double p, Rng & rng);
Pattern random_forest_pattern(std::size_t n, Rng & rng);
/// Clique on the first part, independent set on the rest, random edges across.
Pattern random_split_pattern(std::size_t n, Rng & rng);
/// Each new vertex is joined to a random clique of the current graph, which
/// yields a perfect elimination order in reverse.
Pattern random_chordal_pattern(std::size_t n, Rng & rng);
Pattern random_pattern(std::size_t n, double p, Rng & rng);

} // namespace degencount
