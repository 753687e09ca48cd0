#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "primor/graph.hpp"

namespace primor {

// Plain-text graph document:
//   graph <n>
//   u v                  one edge per line
//   name <id> <label>    optional display labels
// Lines starting with '#' and blank lines are ignored. Parsing is strict:
// out-of-range ids, self-loops and duplicate edges are rejected with the
// offending line number.
struct EdgeListDocument {
    Graph graph;
    std::map<int, std::string> names;

    bool operator==(const EdgeListDocument&) const = default;
};

// Orientation document:
//   digraph <n>
//   u -> v
struct OrientationDocument {
    OrientedGraph graph;

    bool operator==(const OrientationDocument&) const = default;
};

EdgeListDocument parse_edge_list(std::istream& in);
OrientationDocument parse_orientation(std::istream& in);

void print_edge_list(std::ostream& out, const EdgeListDocument& doc);
void print_orientation(std::ostream& out, const OrientationDocument& doc);

// DOT digraph output (emit only); names become node labels when present.
void print_dot(std::ostream& out, const OrientedGraph& o,
               const std::map<int, std::string>& names = {});

}  // namespace primor
