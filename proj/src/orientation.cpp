#include "primor/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

namespace primor {

namespace {

bool is_complete_graph(const Graph& g) {
    return g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
}

bool is_k4(const Graph& g) { return g.vertex_count() == 4 && is_complete_graph(g); }

// The one proof obligation every constructive branch discharges at runtime.
OrientedGraph certified(const Graph& g, OrientedGraph o, const char* stage) {
    if (!is_orientation_of(o, g))
        throw InternalError(std::string("build (") + stage +
                            "): result is not an orientation of the input");
    if (!primality(o).prime)
        throw InternalError(std::string("build (") + stage + "): result is not prime");
    return o;
}

std::vector<std::pair<int, int>> lifted_arcs(const OrientedGraph& o,
                                             const std::vector<int>& vertex_map) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(o.arcs().size());
    for (auto [a, b] : o.arcs()) arcs.emplace_back(vertex_map[a], vertex_map[b]);
    return arcs;
}

// 2^degree >= size, overflow-safe.
bool degree_supports(int degree, std::size_t size) {
    return degree >= 63 || (std::uint64_t{1} << degree) >= size;
}

}  // namespace

Decision decide(const Graph& g) {
    Decision decision;
    if (g.vertex_count() < 3) {
        decision.reason = Reason{ReasonKind::TooSmall, {}, 0};
        return decision;
    }
    if (is_k4(g)) {
        decision.reason = Reason{ReasonKind::IsK4, {}, 0};
        return decision;
    }
    if (!is_connected(g)) {
        decision.reason = Reason{ReasonKind::Disconnected, {}, 0};
        return decision;
    }
    for (const auto& cls : maximal_smodules(g)) {
        const int degree = module_neighborhood(g, cls).degree;
        if (!degree_supports(degree, cls.size())) {
            decision.reason = Reason{ReasonKind::SmoduleDegreeViolation, cls, degree};
            return decision;
        }
    }
    decision.verdict = Verdict::PrimarilyOrientable;
    return decision;
}

Decision certified_decision(const Graph& g, const BuildOptions& options) {
    Decision decision = decide(g);
    if (decision.verdict == Verdict::PrimarilyOrientable) decision.certificate = build(g, options);
    return decision;
}

OrientedGraph orient_least(const Graph& g) {
    return OrientedGraph(g.vertex_count(), g.edges());
}

std::optional<std::vector<int>> find_graph_isomorphism(const Graph& a, const Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n > 8) throw DomainError("find_graph_isomorphism: permutation search limited to n <= 8");
    auto degree_profile = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degree_profile(a) != degree_profile(b)) return std::nullopt;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < n && match; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a.value(u, v) != b.value(sigma[u], sigma[v])) {
                    match = false;
                    break;
                }
        if (match) return sigma;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

BaseCaseTable::BaseCaseTable() {
    auto add = [this](const char* name, int n, std::vector<std::pair<int, int>> edges,
                      std::vector<std::pair<int, int>> arcs) {
        entries_.push_back({name, Graph(n, std::move(edges)), OrientedGraph(n, std::move(arcs))});
    };

    // The six primarily orientable graphs on three or four vertices.
    add("directed path on 3", 3, {{0, 1}, {1, 2}}, {{0, 1}, {1, 2}});
    add("cyclic triangle", 3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1}, {1, 2}, {2, 0}});
    add("cyclic 4-cycle", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    add("diamond", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    add("paw", 4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}}, {{0, 1}, {1, 3}, {3, 0}, {1, 2}});
    add("directed path on 4", 4, {{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}, {2, 3}});

    // The four connected graphs with a vertex whose removal leaves K4:
    // K4 on {0,1,2,3} plus an apex 4 of degree 1, 2, 3 or 4.
    const std::vector<std::pair<int, int>> k4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto k4_plus = [&k4](std::vector<std::pair<int, int>> extra) {
        std::vector<std::pair<int, int>> edges = k4;
        edges.insert(edges.end(), extra.begin(), extra.end());
        return edges;
    };
    add("K4 plus pendant", 5, k4_plus({{3, 4}}),
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}, {3, 1}, {3, 4}});
    add("K4 plus degree-2 apex", 5, k4_plus({{2, 4}, {3, 4}}),
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}, {2, 0}, {3, 4}, {4, 2}});
    add("K5 minus an edge", 5,
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
    add("circulant K5 tournament", 5, k4_plus({{0, 4}, {1, 4}, {2, 4}, {3, 4}}),
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}});

    for (const auto& entry : entries_) {
        if (!is_orientation_of(entry.orientation, entry.key))
            throw InternalError(std::string("base case table: '") + entry.name +
                                "' is not an orientation of its key");
        if (!primality(entry.orientation).prime)
            throw InternalError(std::string("base case table: '") + entry.name + "' is not prime");
    }
}

const BaseCaseTable& BaseCaseTable::instance() {
    static const BaseCaseTable table;
    return table;
}

std::optional<OrientedGraph> BaseCaseTable::orient(const Graph& g) const {
    for (const auto& entry : entries_) {
        if (entry.key.vertex_count() != g.vertex_count() ||
            entry.key.edge_count() != g.edge_count())
            continue;
        if (auto sigma = find_graph_isomorphism(entry.key, g)) {
            std::vector<std::pair<int, int>> arcs;
            arcs.reserve(entry.orientation.arcs().size());
            for (auto [u, v] : entry.orientation.arcs())
                arcs.emplace_back((*sigma)[u], (*sigma)[v]);
            return OrientedGraph(g.vertex_count(), std::move(arcs));
        }
    }
    return std::nullopt;
}

namespace {

OrientedGraph orient_from_base_table(const Graph& g, const char* stage) {
    auto o = BaseCaseTable::instance().orient(g);
    if (!o) throw InternalError(std::string("build (") + stage + "): no base-table entry matches");
    return certified(g, std::move(*o), stage);
}

}  // namespace

OrientedGraph build_sduo_free(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw PreconditionError("build_sduo_free: at least three vertices required");
    if (is_k4(g)) throw PreconditionError("build_sduo_free: K4 admits no prime orientation");
    if (!is_connected(g)) throw PreconditionError("build_sduo_free: graph must be connected");
    if (!is_sduo_free(g)) throw PreconditionError("build_sduo_free: graph has a stable duo");

    if (n <= 4) return orient_from_base_table(g, "small sduo-free base");

    const int x = select_removal_vertex(g);
    auto without_x = induced_subgraph(g, detail::vertices_except(n, {x}));
    const auto remaining_duos = sduos(without_x.graph);

    if (remaining_duos.size() == 1) {
        // x splits the unique stable duo {s, s'} of g - x: it is non-adjacent
        // to s and adjacent to s'.
        int s = without_x.vertex_map[remaining_duos.front().first];
        int sp = without_x.vertex_map[remaining_duos.front().second];
        if (g.value(x, s) == 1) std::swap(s, sp);
        if (g.value(x, s) != 0 || g.value(x, sp) != 1)
            throw InternalError("build_sduo_free: removed vertex does not split the stable duo");

        auto core = induced_subgraph(g, detail::vertices_except(n, {x, s}));

        if (is_k4(core.graph)) {
            // g - x is K5 minus the edge ss'. Start from its fixed prime
            // orientation and place x so that it disagrees with s' on a third
            // vertex; the remaining edges at x are free.
            auto base = BaseCaseTable::instance().orient(without_x.graph);
            if (!base)
                throw InternalError("build_sduo_free: K5 minus an edge missing from base table");
            auto arcs = lifted_arcs(*base, without_x.vertex_map);
            const OrientedGraph partial(n, arcs);
            int alpha = -1;
            for (int v = 0; v < n; ++v)
                if (v != x && v != s && v != sp) {
                    alpha = v;
                    break;
                }
            for (int y : g.neighbors(x)) {
                if (y == alpha)
                    arcs.emplace_back(partial.value(alpha, sp) == 1 ? std::pair{x, alpha}
                                                                    : std::pair{alpha, x});
                else
                    arcs.emplace_back(std::min(x, y), std::max(x, y));
            }
            return certified(g, OrientedGraph(n, std::move(arcs)), "K5-minus-edge core");
        }

        // Recurse on g - {x, s}: connected and sduo-free since s sits in a
        // nontrivial module of g - x and the duo dies with it.
        if (!is_connected(core.graph) || !is_sduo_free(core.graph))
            throw InternalError("build_sduo_free: core lost connectivity or gained a stable duo");
        const OrientedGraph inner = build_sduo_free(core.graph);
        auto arcs = lifted_arcs(inner, core.vertex_map);
        const OrientedGraph partial(n, arcs);

        // Re-insert s as a copy of s', then place x so that it disagrees with
        // s' at a common neighbor v.
        for (int u = 0; u < n; ++u) {
            if (u == x || u == s || u == sp) continue;
            if (g.value(u, s) == 1)
                arcs.emplace_back(partial.value(u, sp) == 1 ? std::pair{u, s} : std::pair{s, u});
        }
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (u != x && u != s && u != sp && g.value(u, sp) == 1) {
                v = u;
                break;
            }
        if (v < 0)
            throw InternalError("build_sduo_free: stable duo without outside neighbors in a "
                                "connected graph");
        for (int y : g.neighbors(x)) {
            if (y == v)
                arcs.emplace_back(partial.value(v, sp) == 1 ? std::pair{x, v} : std::pair{v, x});
            else
                arcs.emplace_back(std::min(x, y), std::max(x, y));
        }
        return certified(g, OrientedGraph(n, std::move(arcs)), "duo reinsertion");
    }

    // g - x is sduo-free.
    if (is_k4(without_x.graph)) return orient_from_base_table(g, "K4 core");
    const OrientedGraph inner = build_sduo_free(without_x.graph);
    const auto base_arcs = lifted_arcs(inner, without_x.vertex_map);
    const auto x_neighbors = g.neighbors(x);

    if (static_cast<int>(x_neighbors.size()) == n - 1) {
        // x sees everything. Scan its placements in counter order: exactly
        // two of them make the rest a module of the result and two per
        // neighbor pair x with it, so at most 2n placements fail and the scan
        // succeeds within 2n + 1 steps.
        const std::uint64_t cap = 2 * static_cast<std::uint64_t>(n) + 1;
        for (std::uint64_t k = 0; k < cap; ++k) {
            auto arcs = base_arcs;
            for (int i = 0; i + 1 < n; ++i)
                arcs.emplace_back(((k >> i) & 1) ? std::pair{x_neighbors[i], x}
                                                 : std::pair{x, x_neighbors[i]});
            OrientedGraph candidate(n, std::move(arcs));
            if (primality(candidate).prime)
                return certified(g, std::move(candidate), "full-degree scan");
        }
        throw InternalError("build_sduo_free: counting bound failed in the full-degree scan");
    }

    // Proper nonempty neighborhood: send every arc out of x. If that is
    // decomposable, x forms a duo with exactly one neighbor; reversing one
    // other arc at x breaks every possible pairing.
    {
        auto arcs = base_arcs;
        for (int y : x_neighbors) arcs.emplace_back(x, y);
        OrientedGraph candidate(n, std::move(arcs));
        if (primality(candidate).prime)
            return certified(g, std::move(candidate), "out-star placement");

        const auto partition = outside_partition(candidate, detail::vertices_except(n, {x}));
        int host = -1;
        for (const auto& [u, cell] : partition.attached)
            if (std::binary_search(cell.begin(), cell.end(), x)) {
                host = u;
                break;
            }
        if (host < 0 || g.value(x, host) != 1)
            throw InternalError("build_sduo_free: decomposable out-star without an attached host");
        int flip = -1;
        for (int y : x_neighbors)
            if (y != host) {
                flip = y;
                break;
            }
        if (flip < 0)
            throw InternalError("build_sduo_free: host is the only neighbor of x in a connected "
                                "graph");
        auto arcs2 = base_arcs;
        for (int y : x_neighbors)
            arcs2.emplace_back(y == flip ? std::pair{y, x} : std::pair{x, y});
        return certified(g, OrientedGraph(n, std::move(arcs2)), "arc reversal");
    }
}

OrientedGraph extend_over_smodule(const Graph& g, std::vector<int> smodule, int x,
                                  const OrientedGraph& o) {
    const int n = g.vertex_count();
    smodule = detail::checked_subset(n, std::move(smodule));

    const auto classes = maximal_smodules(g);
    if (std::find(classes.begin(), classes.end(), smodule) == classes.end())
        throw PreconditionError("extend_over_smodule: the set is not a maximal stable module");
    if (!std::binary_search(smodule.begin(), smodule.end(), x))
        throw PreconditionError("extend_over_smodule: x is not in the stable module");

    auto rest = induced_subgraph(g, detail::vertices_except(n, {x}));
    if (!is_orientation_of(o, rest.graph))
        throw PreconditionError("extend_over_smodule: o is not an orientation of g minus x");
    if (!primality(o).prime)
        throw PreconditionError("extend_over_smodule: o is not prime");

    const ModuleSet hood = module_neighborhood(g, smodule);
    if (!degree_supports(hood.degree, smodule.size()))
        throw PreconditionError("extend_over_smodule: module degree too small for the module size");

    // Out-sets used by the other members of the module, in parent labels.
    // Each is a subset of the module neighborhood because a stable module's
    // members have exactly that neighborhood.
    std::vector<int> position(n, -1);
    for (std::size_t i = 0; i < rest.vertex_map.size(); ++i)
        position[rest.vertex_map[i]] = static_cast<int>(i);
    std::set<std::vector<int>> used;
    for (int v : smodule) {
        if (v == x) continue;
        std::vector<int> outs;
        for (int w : o.out_neighbors(position[v])) outs.push_back(rest.vertex_map[w]);
        std::sort(outs.begin(), outs.end());
        used.insert(std::move(outs));
    }

    // First subset of the neighborhood, in counter order, that no other
    // member uses; at most |S| - 1 subsets are taken, so the scan ends within
    // |S| candidates.
    std::vector<int> chosen;
    bool found = false;
    for (std::uint64_t k = 0; k <= used.size(); ++k) {
        std::vector<int> candidate;
        for (int i = 0; i < hood.degree && i < 64; ++i)
            if ((k >> i) & 1) candidate.push_back(hood.neighborhood[i]);
        if (!used.contains(candidate)) {
            chosen = std::move(candidate);
            found = true;
            break;
        }
    }
    if (!found)
        throw InternalError("extend_over_smodule: no unused out-set below the pigeonhole bound");

    if (g.neighbors(x) != hood.neighborhood)
        throw InternalError("extend_over_smodule: x's neighborhood differs from the module's");

    auto arcs = lifted_arcs(o, rest.vertex_map);
    std::vector<char> outgoing(n, 0);
    for (int y : chosen) outgoing[y] = 1;
    for (int y : hood.neighborhood)
        arcs.emplace_back(outgoing[y] ? std::pair{x, y} : std::pair{y, x});
    return certified(g, OrientedGraph(n, std::move(arcs)), "stable-module extension");
}

OrientedGraph build(const Graph& g, const BuildOptions& options) {
    if (decide(g).verdict != Verdict::PrimarilyOrientable)
        throw PreconditionError("build: graph is not primarily orientable");
    const int n = g.vertex_count();

    if (options.prime_shortcut && primality(g).prime)
        return certified(g, orient_least(g), "prime shortcut");

    if (n <= 4) return orient_from_base_table(g, "small base");

    if (is_sduo_free(g)) return build_sduo_free(g);

    // Peel one vertex off a largest maximal stable module and extend the
    // recursively built orientation back over it.
    const auto classes = maximal_smodules(g);
    const std::vector<int>* largest = &classes.front();
    for (const auto& cls : classes)
        if (cls.size() > largest->size()) largest = &cls;  // ties keep the smaller min vertex
    const std::vector<int>& smodule = *largest;
    const int x = smodule.front();

    auto rest = induced_subgraph(g, detail::vertices_except(n, {x}));
    if (is_k4(rest.graph)) return orient_from_base_table(g, "K4 core");

    // The recursion preconditions are consequences of the degree condition;
    // verify them before descending.
    if (!is_connected(rest.graph))
        throw InternalError("build: removing a stable-module vertex disconnected the graph");
    for (const auto& cls : maximal_smodules(rest.graph))
        if (!degree_supports(module_neighborhood(rest.graph, cls).degree, cls.size()))
            throw InternalError("build: degree condition lost under recursion");

    const OrientedGraph inner = build(rest.graph, options);
    return extend_over_smodule(g, smodule, x, inner);
}

}  // namespace primor
