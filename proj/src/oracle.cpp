#include "primor/oracle.hpp"

#include <chrono>
#include <string>

#include "primor/rng.hpp"

namespace primor {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

}  // namespace

OracleResult exists_prime_orientation(const Graph& g, std::optional<std::uint64_t> budget) {
    const int n = g.vertex_count();
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    if (!budget && m > 62)
        throw DomainError("exists_prime_orientation: refusing full enumeration beyond 62 edges; "
                          "pass a budget");

    OracleResult result;
    std::vector<std::int8_t> matrix(static_cast<std::size_t>(n) * n, 0);
    std::uint64_t counter = 0;
    while (true) {
        if (m <= 62 && counter == (std::uint64_t{1} << m)) {
            result.status = OracleStatus::None;
            return result;
        }
        if (budget && counter == *budget) {
            result.status = OracleStatus::Exhausted;
            return result;
        }
        // Bit value 0 orients edge i from its smaller endpoint.
        for (int i = 0; i < m; ++i) {
            const auto [u, v] = edges[i];
            const bool reversed = i < 64 && ((counter >> i) & 1);
            matrix[static_cast<std::size_t>(u) * n + v] = reversed ? -1 : 1;
            matrix[static_cast<std::size_t>(v) * n + u] = reversed ? 1 : -1;
        }
        result.orientations_tried = counter + 1;
        if (detail::is_prime_matrix(n, matrix.data())) {
            std::vector<std::pair<int, int>> arcs;
            arcs.reserve(m);
            for (int i = 0; i < m; ++i) {
                const auto [u, v] = edges[i];
                const bool reversed = i < 64 && ((counter >> i) & 1);
                arcs.emplace_back(reversed ? std::pair{v, u} : std::pair{u, v});
            }
            result.status = OracleStatus::Found;
            result.witness = OrientedGraph(n, std::move(arcs));
            return result;
        }
        ++counter;
    }
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    if (n < 0) throw DomainError("graph_from_edge_mask: negative vertex count");
    if (pair_count(n) > 62) throw DomainError("graph_from_edge_mask: more than 62 vertex pairs");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

namespace {

void compare_one(SweepReport& report, std::uint64_t index, const Graph& g) {
    const Verdict verdict = decide(g).verdict;
    const bool found = exists_prime_orientation(g).status == OracleStatus::Found;
    ++report.graphs_checked;
    if ((verdict == Verdict::PrimarilyOrientable) != found)
        report.disagreements.push_back({index, g, verdict, found});
}

}  // namespace

SweepReport sweep_all_graphs(int n) {
    if (n < 0 || n > 6) throw DomainError("sweep_all_graphs: n must be at most 6");
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.n = n;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        compare_one(report, mask, graph_from_edge_mask(n, mask));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SweepReport sample_sweep(int n, std::uint64_t count, std::uint64_t seed) {
    if (n < 0 || n > 8) throw DomainError("sample_sweep: n must be at most 8");
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.n = n;
    const std::uint64_t space = std::uint64_t{1} << pair_count(n);
    Rng rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t mask = rng.below(space);
        compare_one(report, mask, graph_from_edge_mask(n, mask));
    }
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace primor
