#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "primor/graph.hpp"
#include "primor/modules.hpp"
#include "primor/rng.hpp"

namespace testsupport {

using primor::Graph;
using primor::OrientedGraph;
using primor::Rng;

// Definition-level module test, kept separate from the library's code paths
// so it can serve as an independent oracle: M is a module iff no outside
// vertex distinguishes two members.
template <class G>
bool naive_is_module(const G& g, const std::vector<int>& members) {
    const int n = g.vertex_count();
    std::vector<char> inside(n, 0);
    for (int m : members) inside[m] = 1;
    for (int v = 0; v < n; ++v) {
        if (inside[v]) continue;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.value(v, members[i]) != g.value(v, members[j])) return false;
    }
    return true;
}

// Exponential primality scan over all vertex subsets.
template <class G>
bool naive_prime(const G& g) {
    const int n = g.vertex_count();
    if (n < 3) return false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) members.push_back(v);
        if (members.size() < 2 || static_cast<int>(members.size()) == n) continue;
        if (naive_is_module(g, members)) return false;
    }
    return true;
}

inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

// Random graph patched into connectivity by linking consecutive components.
inline Graph random_connected_graph(Rng& rng, int n, double p) {
    Graph g = random_graph(rng, n, p);
    const auto cells = primor::connected_components(g);
    if (cells.size() <= 1) return g;
    auto edges = g.edges();
    for (std::size_t i = 1; i < cells.size(); ++i) {
        const int a = cells[i - 1][rng.below(cells[i - 1].size())];
        const int b = cells[i][rng.below(cells[i].size())];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(n, std::move(edges));
}

inline OrientedGraph random_orientation(Rng& rng, const Graph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        arcs.emplace_back(rng.chance(0.5) ? std::pair{v, u} : std::pair{u, v});
    return OrientedGraph(g.vertex_count(), std::move(arcs));
}

// Appends `copies` false twins of vertex v: each clone is adjacent exactly to
// N(v), so {v} plus the clones is a stable module of the result.
inline Graph plant_false_twins(const Graph& g, int v, int copies) {
    const int n = g.vertex_count();
    auto edges = g.edges();
    const auto hood = g.neighbors(v);
    for (int c = 0; c < copies; ++c)
        for (int u : hood) edges.emplace_back(u, n + c);
    return Graph(n + copies, std::move(edges));
}

inline std::vector<int> random_subset(Rng& rng, int n, double keep) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (rng.chance(keep)) out.push_back(v);
    return out;
}

// First 4-subset (lexicographic order) inducing a prime subgraph; for plain
// graphs that is exactly an induced path on four vertices.
template <class G>
std::optional<std::vector<int>> find_prime_4set(const G& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::vector<int> base = {a, b, c, d};
                    if (primor::primality(primor::induced_subgraph(g, base).graph).prime)
                        return base;
                }
    return std::nullopt;
}

}  // namespace testsupport
