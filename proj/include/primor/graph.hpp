#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "primor/error.hpp"

namespace primor {

// Adjacency value between two distinct vertices: 0 means non-adjacent; on a
// Graph, 1 means the edge is present; on an OrientedGraph, +1 means the arc
// u->v is present and -1 means v->u is.
using AdjacencyValue = int;

// Finite simple undirected graph on vertices 0..n-1. Instances are immutable
// after construction and adjacency answers in O(1) from a dense value matrix,
// so they can be shared freely across threads.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Unchecked O(1) adjacency; u and v must be distinct in-range vertices.
    AdjacencyValue value(int u, int v) const {
        return matrix_[static_cast<std::size_t>(u) * n_ + v];
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::vector<int> neighbors(int v) const;
    int degree(int v) const;

    // Row-major n*n value matrix.
    const std::int8_t* matrix_data() const { return matrix_.data(); }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> matrix_;
    std::vector<std::pair<int, int>> edges_;
};

// Oriented graph: at most one arc per unordered pair, no loops. Same storage
// and sharing rules as Graph.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(int vertex_count, std::vector<std::pair<int, int>> arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    AdjacencyValue value(int u, int v) const {
        return matrix_[static_cast<std::size_t>(u) * n_ + v];
    }
    bool has_arc(int u, int v) const { return value(u, v) == 1; }

    // Arcs as ordered pairs, lexicographically sorted.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    std::vector<int> out_neighbors(int v) const;

    const std::int8_t* matrix_data() const { return matrix_.data(); }

    bool operator==(const OrientedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::int8_t> matrix_;
    std::vector<std::pair<int, int>> arcs_;
};

// Checked adjacency query: the vertices must be distinct and in range.
AdjacencyValue adjacency(const Graph& g, int u, int v);
AdjacencyValue adjacency(const OrientedGraph& g, int u, int v);

// Induced subgraph together with its id remapping: vertex_map[new_id] is the
// id the vertex had in the parent graph. New ids follow the sorted order of
// the selected subset.
struct InducedGraph {
    Graph graph;
    std::vector<int> vertex_map;
};
struct InducedOrientedGraph {
    OrientedGraph graph;
    std::vector<int> vertex_map;
};
InducedGraph induced_subgraph(const Graph& g, std::vector<int> subset);
InducedOrientedGraph induced_subgraph(const OrientedGraph& g, std::vector<int> subset);

// Cells are sorted internally, ordered by smallest member, and partition the
// vertex set; there are no edges between distinct cells.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// True iff every vertex outside the set has one constant adjacency value
// toward all of it. The empty set, singletons and the full vertex set are
// modules of every graph.
bool is_module(const Graph& g, std::vector<int> members);
bool is_module(const OrientedGraph& g, std::vector<int> members);

// A vertex set with its cached module facts.
struct ModuleSet {
    std::vector<int> vertices;
    bool is_module = false;
    bool is_stable = false;
    std::vector<int> neighborhood;  // outside vertices adjacent to all of the set
    int degree = 0;                 // |neighborhood|

    bool operator==(const ModuleSet&) const = default;
};

// Neighborhood of a nonempty module: the outside vertices adjacent to some
// (equivalently, all) of it. Empty or non-module input is a precondition
// error; the two defining conditions are inequivalent for such sets.
ModuleSet module_neighborhood(const Graph& g, std::vector<int> members);

// Exactly one arc per edge of g and no arc elsewhere.
bool is_orientation_of(const OrientedGraph& o, const Graph& g);

// At least two vertices and no edge inside the set.
bool is_stable_set(const Graph& g, std::vector<int> members);

namespace detail {

void check_vertex(int n, int v);
void check_vertex_pair(int n, int u, int v);

// Sorted, validated copy of a vertex subset (range and duplicate checks).
std::vector<int> checked_subset(int n, std::vector<int> subset);

// Sorted complement of a small removal set.
std::vector<int> vertices_except(int n, std::vector<int> removed);

}  // namespace detail

}  // namespace primor
