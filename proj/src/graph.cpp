#include "primor/graph.hpp"

#include <algorithm>
#include <string>

namespace primor {

namespace detail {

void check_vertex(int n, int v) {
    if (v < 0 || v >= n)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n) + ")");
}

void check_vertex_pair(int n, int u, int v) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw DomainError("vertex pair with equal endpoints " + std::to_string(u));
}

std::vector<int> checked_subset(int n, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        check_vertex(n, subset[i]);
        if (i > 0 && subset[i] == subset[i - 1])
            throw DomainError("duplicate vertex " + std::to_string(subset[i]) + " in subset");
    }
    return subset;
}

std::vector<int> vertices_except(int n, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    std::vector<int> out;
    out.reserve(n);
    for (int v = 0; v < n; ++v)
        if (!std::binary_search(removed.begin(), removed.end(), v)) out.push_back(v);
    return out;
}

}  // namespace detail

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        detail::check_vertex_pair(n_, u, v);
        if (u > v) std::swap(u, v);
        auto& cell = matrix_[static_cast<std::size_t>(u) * n_ + v];
        if (cell != 0)
            throw DomainError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        cell = 1;
        matrix_[static_cast<std::size_t>(v) * n_ + u] = 1;
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<int> Graph::neighbors(int v) const {
    detail::check_vertex(n_, v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && value(v, u) == 1) out.push_back(u);
    return out;
}

int Graph::degree(int v) const {
    detail::check_vertex(n_, v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && value(v, u) == 1) ++d;
    return d;
}

OrientedGraph::OrientedGraph(int vertex_count, std::vector<std::pair<int, int>> arcs)
    : n_(vertex_count) {
    if (vertex_count < 0) throw DomainError("negative vertex count");
    matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
    arcs_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
        detail::check_vertex_pair(n_, u, v);
        if (matrix_[static_cast<std::size_t>(u) * n_ + v] != 0)
            throw DomainError("conflicting arcs between " + std::to_string(u) + " and " +
                              std::to_string(v));
        matrix_[static_cast<std::size_t>(u) * n_ + v] = 1;
        matrix_[static_cast<std::size_t>(v) * n_ + u] = -1;
        arcs_.emplace_back(u, v);
    }
    std::sort(arcs_.begin(), arcs_.end());
}

std::vector<int> OrientedGraph::out_neighbors(int v) const {
    detail::check_vertex(n_, v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (u != v && value(v, u) == 1) out.push_back(u);
    return out;
}

AdjacencyValue adjacency(const Graph& g, int u, int v) {
    detail::check_vertex_pair(g.vertex_count(), u, v);
    return g.value(u, v);
}

AdjacencyValue adjacency(const OrientedGraph& g, int u, int v) {
    detail::check_vertex_pair(g.vertex_count(), u, v);
    return g.value(u, v);
}

namespace {

template <class G>
std::pair<std::vector<int>, std::vector<std::pair<int, int>>> induced_parts(
    const G& g, std::vector<int> subset, const std::vector<std::pair<int, int>>& links) {
    auto map = detail::checked_subset(g.vertex_count(), std::move(subset));
    std::vector<int> position(g.vertex_count(), -1);
    for (std::size_t i = 0; i < map.size(); ++i) position[map[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : links)
        if (position[u] >= 0 && position[v] >= 0) kept.emplace_back(position[u], position[v]);
    return {std::move(map), std::move(kept)};
}

}  // namespace

InducedGraph induced_subgraph(const Graph& g, std::vector<int> subset) {
    auto [map, kept] = induced_parts(g, std::move(subset), g.edges());
    return {Graph(static_cast<int>(map.size()), std::move(kept)), std::move(map)};
}

InducedOrientedGraph induced_subgraph(const OrientedGraph& g, std::vector<int> subset) {
    auto [map, kept] = induced_parts(g, std::move(subset), g.arcs());
    return {OrientedGraph(static_cast<int>(map.size()), std::move(kept)), std::move(map)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> cells;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> cell;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cell.push_back(v);
            for (int u = 0; u < n; ++u)
                if (!seen[u] && u != v && g.value(v, u) == 1) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        std::sort(cell.begin(), cell.end());
        cells.push_back(std::move(cell));
    }
    return cells;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && u != v && g.value(v, u) == 1) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

namespace {

template <class G>
bool is_module_impl(const G& g, std::vector<int> members) {
    const int n = g.vertex_count();
    members = detail::checked_subset(n, std::move(members));
    if (members.size() <= 1 || static_cast<int>(members.size()) == n) return true;
    std::vector<char> inside(n, 0);
    for (int m : members) inside[m] = 1;
    for (int v = 0; v < n; ++v) {
        if (inside[v]) continue;
        const AdjacencyValue ref = g.value(v, members.front());
        for (std::size_t i = 1; i < members.size(); ++i)
            if (g.value(v, members[i]) != ref) return false;
    }
    return true;
}

}  // namespace

bool is_module(const Graph& g, std::vector<int> members) {
    return is_module_impl(g, std::move(members));
}

bool is_module(const OrientedGraph& g, std::vector<int> members) {
    return is_module_impl(g, std::move(members));
}

ModuleSet module_neighborhood(const Graph& g, std::vector<int> members) {
    const int n = g.vertex_count();
    members = detail::checked_subset(n, std::move(members));
    if (members.empty())
        throw PreconditionError("module_neighborhood: undefined for the empty module");
    if (!is_module(g, members))
        throw PreconditionError("module_neighborhood: the set is not a module");
    std::vector<char> inside(n, 0);
    for (int m : members) inside[m] = 1;
    ModuleSet out;
    out.is_module = true;
    out.is_stable = is_stable_set(g, members);
    for (int v = 0; v < n; ++v)
        if (!inside[v] && g.value(v, members.front()) == 1) out.neighborhood.push_back(v);
    out.degree = static_cast<int>(out.neighborhood.size());
    out.vertices = std::move(members);
    return out;
}

bool is_orientation_of(const OrientedGraph& o, const Graph& g) {
    if (o.vertex_count() != g.vertex_count()) return false;
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int want = g.value(u, v);
            const int got = o.value(u, v);
            if (want == 1 ? got == 0 : got != 0) return false;
        }
    return true;
}

bool is_stable_set(const Graph& g, std::vector<int> members) {
    members = detail::checked_subset(g.vertex_count(), std::move(members));
    if (members.size() < 2) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.value(members[i], members[j]) != 0) return false;
    return true;
}

}  // namespace primor
