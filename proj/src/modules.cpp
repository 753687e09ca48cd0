#include "primor/modules.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace primor {

namespace {

// Splitter closure from a seed pair {a, b}. Outside vertices are compared
// against vertex a: z joins as soon as some processed member w satisfies
// value(z, w) != value(z, a). Every member except a passes through the queue
// exactly once, so any splitter of two current members is detected. Cost is
// O(n) per joined vertex.
int grow_module(int n, const std::int8_t* m, int a, int b, std::vector<char>& in_set,
                std::vector<int>& queue) {
    std::fill(in_set.begin(), in_set.end(), 0);
    in_set[a] = in_set[b] = 1;
    queue.assign(1, b);
    int size = 2;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int w = queue[head];
        const std::size_t col_w = static_cast<std::size_t>(w);
        const std::size_t col_a = static_cast<std::size_t>(a);
        for (int z = 0; z < n; ++z) {
            if (in_set[z]) continue;
            const std::size_t row = static_cast<std::size_t>(z) * n;
            if (m[row + col_w] != m[row + col_a]) {
                in_set[z] = 1;
                queue.push_back(z);
                ++size;
            }
        }
    }
    return size;
}

template <class G>
std::vector<int> minimal_module_impl(const G& g, std::pair<int, int> seed) {
    const int n = g.vertex_count();
    detail::check_vertex_pair(n, seed.first, seed.second);
    std::vector<char> in_set(n);
    std::vector<int> queue;
    queue.reserve(n);
    grow_module(n, g.matrix_data(), seed.first, seed.second, in_set, queue);
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if (in_set[v]) members.push_back(v);
    return members;
}

template <class G>
PrimalityReport primality_impl(const G& g) {
    PrimalityReport report;
    const int n = g.vertex_count();
    if (n <= 2) return report;  // indecomposable but too small to be prime
    const std::int8_t* m = g.matrix_data();
    std::vector<char> in_set(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (grow_module(n, m, a, b, in_set, queue) < n) {
                std::vector<int> members;
                for (int v = 0; v < n; ++v)
                    if (in_set[v]) members.push_back(v);
                report.witness = std::move(members);
                return report;
            }
    report.prime = true;
    return report;
}

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }

    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

namespace detail {

bool is_prime_matrix(int n, const std::int8_t* values) {
    if (n <= 2) return false;
    std::vector<char> in_set(n);
    std::vector<int> queue;
    queue.reserve(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (grow_module(n, values, a, b, in_set, queue) < n) return false;
    return true;
}

}  // namespace detail

std::vector<std::pair<int, int>> sduos(const Graph& g) {
    const int n = g.vertex_count();
    const std::int8_t* m = g.matrix_data();
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.value(x, y) != 0) continue;
            bool twins = true;
            for (int z = 0; z < n && twins; ++z) {
                if (z == x || z == y) continue;
                const std::size_t row = static_cast<std::size_t>(z) * n;
                if (m[row + x] != m[row + y]) twins = false;
            }
            if (twins) out.emplace_back(x, y);
        }
    return out;
}

bool is_sduo_free(const Graph& g) {
    const int n = g.vertex_count();
    const std::int8_t* m = g.matrix_data();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.value(x, y) != 0) continue;
            bool twins = true;
            for (int z = 0; z < n && twins; ++z) {
                if (z == x || z == y) continue;
                const std::size_t row = static_cast<std::size_t>(z) * n;
                if (m[row + x] != m[row + y]) twins = false;
            }
            if (twins) return false;
        }
    return true;
}

std::vector<std::vector<int>> maximal_smodules(const Graph& g) {
    const int n = g.vertex_count();
    UnionFind uf(n);
    for (auto [x, y] : sduos(g)) uf.join(x, y);
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    for (auto& cell : by_root)
        if (cell.size() >= 2) classes.push_back(std::move(cell));
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

std::vector<int> minimal_module_containing(const Graph& g, std::pair<int, int> seed) {
    return minimal_module_impl(g, seed);
}

std::vector<int> minimal_module_containing(const OrientedGraph& g, std::pair<int, int> seed) {
    return minimal_module_impl(g, seed);
}

PrimalityReport primality(const Graph& g) { return primality_impl(g); }

PrimalityReport primality(const OrientedGraph& g) { return primality_impl(g); }

namespace {

template <class G>
OutsidePartition outside_partition_impl(const G& g, std::vector<int> base) {
    const int n = g.vertex_count();
    OutsidePartition part;
    part.base = detail::checked_subset(n, std::move(base));
    if (!primality(induced_subgraph(g, part.base).graph).prime)
        throw PreconditionError("outside_partition: base set must induce a prime subgraph");
    for (int u : part.base) part.attached[u];

    std::vector<char> in_base(n, 0);
    for (int u : part.base) in_base[u] = 1;

    for (int v = 0; v < n; ++v) {
        if (in_base[v]) continue;
        std::vector<int> extended = part.base;
        extended.insert(std::lower_bound(extended.begin(), extended.end(), v), v);
        auto sub = induced_subgraph(g, extended);
        const int v_new = static_cast<int>(
            std::lower_bound(extended.begin(), extended.end(), v) - extended.begin());

        std::vector<int> base_new;
        for (std::size_t i = 0; i < extended.size(); ++i)
            if (static_cast<int>(i) != v_new) base_new.push_back(static_cast<int>(i));

        const bool extends_prime = primality(sub.graph).prime;
        const bool sees_module = is_module(sub.graph, base_new);
        std::vector<int> hosts;
        for (int i : base_new)
            if (is_module(sub.graph, {i, v_new})) hosts.push_back(sub.vertex_map[i]);

        const int hits = (extends_prime ? 1 : 0) + (sees_module ? 1 : 0) + (hosts.empty() ? 0 : 1);
        if (hits != 1 || hosts.size() > 1)
            throw InternalError("outside_partition: vertex " + std::to_string(v) +
                                " does not fall into exactly one cell");
        if (extends_prime)
            part.ext.push_back(v);
        else if (sees_module)
            part.hom.push_back(v);
        else
            part.attached[hosts.front()].push_back(v);
    }
    return part;
}

}  // namespace

OutsidePartition outside_partition(const Graph& g, std::vector<int> base) {
    return outside_partition_impl(g, std::move(base));
}

OutsidePartition outside_partition(const OrientedGraph& g, std::vector<int> base) {
    return outside_partition_impl(g, std::move(base));
}

int select_removal_vertex(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("select_removal_vertex: need at least two vertices");
    if (!is_connected(g)) throw PreconditionError("select_removal_vertex: graph must be connected");
    if (!is_sduo_free(g)) throw PreconditionError("select_removal_vertex: graph must be sduo-free");
    for (int v = 0; v < n; ++v) {
        auto sub = induced_subgraph(g, detail::vertices_except(n, {v}));
        if (!is_connected(sub.graph)) continue;
        if (sduos(sub.graph).size() <= 1) return v;
    }
    throw InternalError("select_removal_vertex: no vertex qualifies in a connected sduo-free graph");
}

}  // namespace primor
