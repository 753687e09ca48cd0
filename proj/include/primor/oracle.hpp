#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primor/graph.hpp"
#include "primor/orientation.hpp"

namespace primor {

enum class OracleStatus { Found, None, Exhausted };

struct OracleResult {
    OracleStatus status = OracleStatus::None;
    std::optional<OrientedGraph> witness;  // first prime orientation found
    std::uint64_t orientations_tried = 0;
};

// Exhaustive search for a prime orientation. Orientations are enumerated as
// m-bit counters over the lexicographically sorted edge list; bit value 0
// orients an edge from its smaller endpoint. Stops at the first prime
// orientation, after full enumeration, or once the budget is spent. Full
// enumeration past 62 edges is refused unless a budget is given.
OracleResult exists_prime_orientation(const Graph& g,
                                      std::optional<std::uint64_t> budget = {});

// The labeled graph whose edge set is the given bitmask over the
// lexicographic pair order (0,1),(0,2),...,(n-2,n-1).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

struct Disagreement {
    std::uint64_t graph_index = 0;
    Graph graph;
    Verdict decided = Verdict::NotPrimarilyOrientable;
    bool oracle_found = false;
};

// Empty disagreement list on a passing run.
struct SweepReport {
    int n = 0;
    std::uint64_t graphs_checked = 0;
    std::vector<Disagreement> disagreements;
    double elapsed_seconds = 0.0;
};

// Compares decide() with the orientation-enumeration oracle over every
// labeled graph on n vertices, n <= 6.
SweepReport sweep_all_graphs(int n);

// Same comparison over a seeded sample of labeled graphs, n <= 8.
SweepReport sample_sweep(int n, std::uint64_t count, std::uint64_t seed);

}  // namespace primor
