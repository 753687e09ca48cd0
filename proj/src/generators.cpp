#include "primor/generators.hpp"

#include <string>
#include <utility>
#include <vector>

#include "primor/rng.hpp"

namespace primor {

namespace {

void require_positive(int n, const char* family) {
    if (n < 1) throw DomainError(std::string(family) + ": parameter must be at least 1");
}

}  // namespace

Graph complete(int n) {
    require_positive(n, "complete");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star(int n) {
    require_positive(n, "star");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int leaf = 1; leaf <= n; ++leaf) edges.emplace_back(0, leaf);
    return Graph(n + 1, std::move(edges));
}

Graph path(int n) {
    require_positive(n, "path");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) throw DomainError("cycle: needs at least 3 vertices to stay simple");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n);
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph half_graph(int n) {
    require_positive(n, "half_graph");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) edges.emplace_back(2 * i, 2 * j + 1);
    return Graph(2 * n, std::move(edges));
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    require_positive(n, "erdos_renyi");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("erdos_renyi: probability outside [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

}  // namespace primor
