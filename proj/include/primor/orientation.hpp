#pragma once

#include <optional>
#include <vector>

#include "primor/graph.hpp"
#include "primor/modules.hpp"

namespace primor {

enum class Verdict { PrimarilyOrientable, NotPrimarilyOrientable };

enum class ReasonKind { TooSmall, IsK4, Disconnected, SmoduleDegreeViolation };

// Machine-checkable reason for a negative verdict. For
// SmoduleDegreeViolation, smodule holds a stable module S with
// 2^degree < |S|.
struct Reason {
    ReasonKind kind = ReasonKind::TooSmall;
    std::vector<int> smodule;
    int degree = 0;
};

struct Decision {
    Verdict verdict = Verdict::NotPrimarilyOrientable;
    std::optional<Reason> reason;              // present iff negative
    std::optional<OrientedGraph> certificate;  // prime orientation, when built
};

// Decides primary orientability: a graph on at least three vertices, other
// than K4, admits a prime orientation iff it is connected and every stable
// module S satisfies 2^degree(S) >= |S|. Only maximal false-twin classes are
// checked; a stable sub-module shares its class's neighborhood, so this is
// equivalent. Verdict only; build() constructs the certificate.
Decision decide(const Graph& g);

struct BuildOptions {
    // Any orientation of a prime graph is prime; disabling this shortcut
    // forces the full inductive construction (tests exercise both paths).
    bool prime_shortcut = true;
};

// Constructs a prime orientation of a primarily orientable graph. Every
// branch re-certifies its output; a failed certificate is an InternalError,
// never an expected outcome.
OrientedGraph build(const Graph& g, const BuildOptions& options = {});

// The inductive construction for connected sduo-free graphs on at least
// three vertices, other than K4.
OrientedGraph build_sduo_free(const Graph& g);

// Given a maximal stable module S of g, a vertex x in S, and a prime
// orientation o of g - x (labeled per induced_subgraph of the remaining
// vertices), picks an out-set for x inside the module neighborhood that no
// other member of S uses and extends o to a prime orientation of g.
OrientedGraph extend_over_smodule(const Graph& g, std::vector<int> smodule, int x,
                                  const OrientedGraph& o);

// decide() with the certificate attached on the positive side.
Decision certified_decision(const Graph& g, const BuildOptions& options = {});

// Every edge oriented from its smaller endpoint.
OrientedGraph orient_least(const Graph& g);

// Brute-force isomorphism search for small graphs (n <= 8): returns sigma
// with sigma[a_vertex] = b_vertex, or nullopt.
std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b);

// Fixed prime orientations of the ten small base graphs: the six primarily
// orientable graphs on three or four vertices, and the four connected graphs
// with a vertex whose removal leaves K4. Every entry is validated (prime and
// an orientation of its key) when the table is first used.
class BaseCaseTable {
public:
    struct Entry {
        const char* name;
        Graph key;
        OrientedGraph orientation;
    };

    static const BaseCaseTable& instance();

    const std::vector<Entry>& entries() const { return entries_; }

    // Orientation for a graph isomorphic to one of the keys, relabeled to
    // g's vertices; nullopt when nothing matches.
    std::optional<OrientedGraph> orient(const Graph& g) const;

private:
    BaseCaseTable();

    std::vector<Entry> entries_;
};

}  // namespace primor
