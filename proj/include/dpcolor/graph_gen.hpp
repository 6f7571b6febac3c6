#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

/// Canonical code of a simple graph with at most 11 vertices: the least
/// upper-triangle bit string over all relabelings that list vertices by
/// non-increasing degree. Equal codes iff isomorphic.
std::uint64_t canonical_code(const Multigraph& g);
Multigraph from_canonical_code(int n, std::uint64_t code);

/// All connected simple graphs on n vertices up to isomorphism (n <= 7),
/// ordered by edge count, then canonical code.
std::vector<Multigraph> connected_graphs(int n);
/// connected_graphs(1) ... connected_graphs(n_max), concatenated.
std::vector<Multigraph> connected_graphs_up_to(int n_max);
/// Trees on n vertices up to isomorphism (n <= 7).
std::vector<Multigraph> trees(int n);

/// G(n, p) conditioned on connectivity by rejection.
Multigraph random_connected_graph(int n, std::mt19937_64& rng, double p = 0.5);

}  // namespace dpcolor
