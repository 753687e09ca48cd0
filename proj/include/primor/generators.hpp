#pragma once

#include <cstdint>

#include "primor/graph.hpp"

namespace primor {

Graph complete(int n);

// Star K_{1,n}: center 0 joined to leaves 1..n.
Graph star(int n);

// Path 0-1-...-(n-1).
Graph path(int n);

// Cycle 0-1-...-(n-1)-0; needs n >= 3 to stay simple.
Graph cycle(int n);

// Half graph on 2n vertices {0,...,2n-1} with an edge (2i)(2j+1) exactly when
// i <= j. Prime for n >= 2 and critical: deleting any single vertex leaves a
// decomposable graph.
Graph half_graph(int n);

// Each pair becomes an edge independently with probability p. Identical
// seeds produce identical graphs on every platform (see Rng).
Graph erdos_renyi(int n, double p, std::uint64_t seed);

}  // namespace primor
