#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "primor/graph.hpp"

namespace primor {

// All stable duos (pairs of non-adjacent false twins), in lexicographic
// order.
std::vector<std::pair<int, int>> sduos(const Graph& g);

bool is_sduo_free(const Graph& g);

// The maximal stable modules, i.e. the false-twin classes of size >= 2.
// Every stable module of g is contained in exactly one returned class;
// classes are pairwise disjoint, sorted internally, ordered by smallest
// member.
std::vector<std::vector<int>> maximal_smodules(const Graph& g);

// Inclusion-minimal module containing the seed pair, grown by splitter
// closure: while some outside vertex distinguishes two current members, it
// joins the set.
std::vector<int> minimal_module_containing(const Graph& g, std::pair<int, int> seed);
std::vector<int> minimal_module_containing(const OrientedGraph& g, std::pair<int, int> seed);

struct PrimalityReport {
    bool prime = false;
    // First nontrivial module found (lexicographic seed-pair order); present
    // exactly when the graph is decomposable with at least three vertices.
    std::optional<std::vector<int>> witness;
};

// Prime = indecomposable with at least three vertices. Tested with one
// splitter closure per vertex pair: the graph is indecomposable iff every
// closure is the whole vertex set.
PrimalityReport primality(const Graph& g);
PrimalityReport primality(const OrientedGraph& g);

// Classification of the vertices outside a prime-inducing base set X:
// ext keeps the induced subgraph prime, hom sees X as a module, and
// attached[u] forms a duo with u.
struct OutsidePartition {
    std::vector<int> base;                     // X, sorted
    std::vector<int> ext;
    std::vector<int> hom;
    std::map<int, std::vector<int>> attached;  // one entry per u in X
};

OutsidePartition outside_partition(const Graph& g, std::vector<int> base);
OutsidePartition outside_partition(const OrientedGraph& g, std::vector<int> base);

// Smallest vertex whose removal keeps the graph connected and leaves at most
// one stable duo. Requires a connected sduo-free graph on at least two
// vertices; such a vertex always exists there, so the exhaustive scan
// succeeds.
int select_removal_vertex(const Graph& g);

namespace detail {

// Primality on a raw row-major n*n value matrix; the allocation-light core
// shared with the exhaustive orientation search.
bool is_prime_matrix(int n, const std::int8_t* values);

}  // namespace detail

}  // namespace primor
