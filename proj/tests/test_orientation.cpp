#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "primor/generators.hpp"
#include "primor/oracle.hpp"
#include "primor/orientation.hpp"
#include "support.hpp"

using namespace primor;

namespace {

std::string arc_signature(const OrientedGraph& o) {
    std::ostringstream out;
    for (auto [u, v] : o.arcs()) out << u << ">" << v << ";";
    return out.str();
}

void check_certificate(const Graph& g, const OrientedGraph& o) {
    CHECK(is_orientation_of(o, g));
    CHECK(primality(o).prime);
}

}  // namespace

TEST_CASE("decide on the named instances") {
    const Decision k4 = decide(complete(4));
    CHECK(k4.verdict == Verdict::NotPrimarilyOrientable);
    CHECK(k4.reason->kind == ReasonKind::IsK4);

    for (int n = 3; n <= 10; ++n) {
        const Decision d = decide(star(n));
        CHECK(d.verdict == Verdict::NotPrimarilyOrientable);
        REQUIRE(d.reason.has_value());
        CHECK(d.reason->kind == ReasonKind::SmoduleDegreeViolation);
        std::vector<int> leaves;
        for (int leaf = 1; leaf <= n; ++leaf) leaves.push_back(leaf);
        CHECK(d.reason->smodule == leaves);
        CHECK(d.reason->degree == 1);
    }

    for (int n = 5; n <= 10; ++n)
        CHECK(decide(complete(n)).verdict == Verdict::PrimarilyOrientable);

    CHECK(decide(Graph(0, {})).reason->kind == ReasonKind::TooSmall);
    CHECK(decide(Graph(2, {{0, 1}})).reason->kind == ReasonKind::TooSmall);
    CHECK(decide(Graph(5, {{0, 1}, {2, 3}})).reason->kind == ReasonKind::Disconnected);
}

TEST_CASE("base case table validates and looks up by isomorphism") {
    const auto& table = BaseCaseTable::instance();
    CHECK(table.entries().size() == 10);
    for (const auto& entry : table.entries()) {
        CHECK(is_orientation_of(entry.orientation, entry.key));
        CHECK(primality(entry.orientation).prime);
        CHECK(testsupport::naive_prime(entry.orientation));
    }

    // A relabeled 4-cycle still finds its entry.
    const Graph shuffled_c4(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    const auto oriented = table.orient(shuffled_c4);
    REQUIRE(oriented.has_value());
    check_certificate(shuffled_c4, *oriented);

    CHECK_FALSE(table.orient(star(3)).has_value());
    CHECK_FALSE(table.orient(complete(4)).has_value());
}

TEST_CASE("isomorphism search") {
    CHECK(find_graph_isomorphism(path(4), path(4)) == std::vector<int>{0, 1, 2, 3});
    const auto sigma = find_graph_isomorphism(path(3), Graph(3, {{0, 2}, {1, 2}}));
    REQUIRE(sigma.has_value());
    CHECK((*sigma)[1] == 2);  // the middle of the path maps to the middle
    CHECK_FALSE(find_graph_isomorphism(path(4), star(3)).has_value());
    CHECK_FALSE(find_graph_isomorphism(path(4), path(3)).has_value());
}

TEST_CASE("build on small fixed instances") {
    // The triangle gets the cyclic orientation from the table.
    const OrientedGraph tri = build(complete(3));
    check_certificate(complete(3), tri);
    CHECK(tri.arc_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(tri.out_neighbors(v).size() == 1);

    // A prime input takes the shortcut: all arcs run low to high.
    const OrientedGraph p4 = build(path(4));
    CHECK(p4.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    check_certificate(path(4), p4);

    const OrientedGraph h3 = build(half_graph(3));
    check_certificate(half_graph(3), h3);

    for (int n = 5; n <= 9; ++n) {
        const Graph kn = complete(n);
        const OrientedGraph t = build(kn);
        check_certificate(kn, t);
        CHECK(t.arc_count() == kn.edge_count());
    }

    CHECK_THROWS_AS(build(complete(4)), PreconditionError);
    CHECK_THROWS_AS(build(star(3)), PreconditionError);
    CHECK_THROWS_AS(build(Graph(2, {{0, 1}})), PreconditionError);
}

TEST_CASE("build covers every positively decided graph on up to five vertices") {
    for (int n = 3; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const Graph g = graph_from_edge_mask(n, mask);
            if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
            const OrientedGraph with = build(g);
            check_certificate(g, with);
            CHECK(testsupport::naive_prime(with));
            check_certificate(g, build(g, {.prime_shortcut = false}));
        }
    }
}

TEST_CASE("build covers every positively decided graph on six vertices, shortcut off") {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << 15); ++mask) {
        const Graph g = graph_from_edge_mask(6, mask);
        if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
        check_certificate(g, build(g, {.prime_shortcut = false}));
    }
}

TEST_CASE("build without the shortcut follows the inductive path on samples") {
    testsupport::Rng rng(41);
    int done = 0;
    while (done < 120) {
        const Graph g = testsupport::random_connected_graph(rng, rng.range(3, 12), 0.4);
        if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
        const OrientedGraph with = build(g);
        const OrientedGraph without = build(g, {.prime_shortcut = false});
        check_certificate(g, with);
        check_certificate(g, without);
        ++done;
    }
}

TEST_CASE("K5 minus an edge routes through the table for its K4 core") {
    Graph k5e(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    // The stable duo is {3, 4}; dropping 3 leaves K4.
    REQUIRE(maximal_smodules(k5e) == std::vector<std::vector<int>>{{3, 4}});
    const OrientedGraph o = build(k5e);
    check_certificate(k5e, o);
}

TEST_CASE("six-vertex instance lands in the K5-minus-edge core of the sduo-free case") {
    // K5 on {1..5} without the edge {4,5}, plus the edge {0,4}: removing 0
    // leaves K5 minus an edge whose unique stable duo {4,5} is split by 0,
    // and removing {0,5} as well leaves K4.
    const Graph g(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                      {0, 4}});
    REQUIRE(decide(g).verdict == Verdict::PrimarilyOrientable);
    REQUIRE(is_sduo_free(g));
    REQUIRE(select_removal_vertex(g) == 0);
    const auto sub = induced_subgraph(g, detail::vertices_except(6, {0}));
    REQUIRE(sduos(sub.graph).size() == 1);
    const auto core = induced_subgraph(g, {1, 2, 3, 4});
    REQUIRE(core.graph == complete(4));
    check_certificate(g, build(g));
}

TEST_CASE("seven-vertex instance recurses through the duo reinsertion case") {
    // K6 on {1..6} without the edge {5,6}, plus the edge {0,5}: removing 0
    // leaves a unique stable duo {5,6}, and the remaining core is K5.
    std::vector<std::pair<int, int>> edges;
    for (int u = 1; u <= 6; ++u)
        for (int v = u + 1; v <= 6; ++v)
            if (!(u == 5 && v == 6)) edges.emplace_back(u, v);
    edges.emplace_back(0, 5);
    const Graph g(7, edges);
    REQUIRE(is_sduo_free(g));
    REQUIRE(select_removal_vertex(g) == 0);
    const auto sub = induced_subgraph(g, detail::vertices_except(7, {0}));
    REQUIRE(sduos(sub.graph).size() == 1);
    const auto core = induced_subgraph(g, detail::vertices_except(7, {0, 6}));
    REQUIRE(core.graph == complete(5));
    check_certificate(g, build(g));
}

TEST_CASE("extend_over_smodule worked example: the unused out-set is empty") {
    // Stable module {3, 4} over neighborhood {0, 1, 2}; vertex 3 already uses
    // the out-set {0}, so the counter picks the empty set and every new arc
    // points into 4.
    const Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}});
    const OrientedGraph o(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
    const OrientedGraph extended = extend_over_smodule(g, {3, 4}, 4, o);
    check_certificate(g, extended);
    CHECK(extended.value(0, 4) == 1);
    CHECK(extended.value(1, 4) == 1);
    CHECK(extended.value(2, 4) == 1);
}

TEST_CASE("extend_over_smodule pigeonhole floor case") {
    // |S| = 2 with degree 1: two possible out-sets, one taken.
    const Graph g(5, {{0, 1}, {1, 4}, {0, 2}, {0, 3}});
    REQUIRE(maximal_smodules(g) == std::vector<std::vector<int>>{{2, 3}});
    const auto sub = induced_subgraph(g, {0, 1, 2, 4});
    const OrientedGraph o = orient_least(sub.graph);
    REQUIRE(primality(o).prime);
    const OrientedGraph extended = extend_over_smodule(g, {2, 3}, 3, o);
    check_certificate(g, extended);
    CHECK(extended.has_arc(3, 0));  // the empty out-set was taken by vertex 2
}

TEST_CASE("extend_over_smodule rejects bad inputs") {
    const Graph g(5, {{0, 1}, {1, 4}, {0, 2}, {0, 3}});
    const auto sub = induced_subgraph(g, {0, 1, 2, 4});
    const OrientedGraph o = orient_least(sub.graph);
    CHECK_THROWS_AS(extend_over_smodule(g, {2, 3, 4}, 3, o), PreconditionError);
    CHECK_THROWS_AS(extend_over_smodule(g, {2, 3}, 4, o), PreconditionError);
    CHECK_THROWS_AS(extend_over_smodule(g, {2, 3}, 3, OrientedGraph(4, {})), PreconditionError);
}

TEST_CASE("stable-module degree bound at its exact boundary") {
    // Eight false twins over a triangle neighborhood: |S| = 8 = 2^3, the
    // tightest ratio the condition allows. The deepest extension has exactly
    // one unused out-set left.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 3; t <= 10; ++t)
        for (int c = 0; c < 3; ++c) edges.emplace_back(c, t);
    const Graph tight(11, edges);
    REQUIRE(maximal_smodules(tight) ==
            std::vector<std::vector<int>>{{3, 4, 5, 6, 7, 8, 9, 10}});
    REQUIRE(decide(tight).verdict == Verdict::PrimarilyOrientable);
    check_certificate(tight, build(tight));
    check_certificate(tight, build(tight, {.prime_shortcut = false}));

    // Four twins over a two-vertex neighborhood stay decidable; a fifth twin
    // crosses the bound. The oracle confirms both sides.
    auto twins_over_pair = [](int twins) {
        std::vector<std::pair<int, int>> e = {{0, 1}};
        for (int t = 2; t < 2 + twins; ++t) {
            e.emplace_back(0, t);
            e.emplace_back(1, t);
        }
        return Graph(2 + twins, e);
    };
    const Graph four = twins_over_pair(4);
    CHECK(decide(four).verdict == Verdict::PrimarilyOrientable);
    CHECK(exists_prime_orientation(four).status == OracleStatus::Found);
    check_certificate(four, build(four));

    const Graph five = twins_over_pair(5);
    const Decision blocked = decide(five);
    CHECK(blocked.verdict == Verdict::NotPrimarilyOrientable);
    REQUIRE(blocked.reason.has_value());
    CHECK(blocked.reason->kind == ReasonKind::SmoduleDegreeViolation);
    CHECK(blocked.reason->smodule == std::vector<int>{2, 3, 4, 5, 6});
    CHECK(blocked.reason->degree == 2);
    CHECK(exists_prime_orientation(five).status == OracleStatus::None);
}

TEST_CASE("members of a stable module have distinct out-sets in any prime orientation") {
    testsupport::Rng rng(42);
    int done = 0;
    while (done < 150) {
        const Graph base = testsupport::random_connected_graph(rng, rng.range(3, 8), 0.5);
        const Graph g =
            testsupport::plant_false_twins(base, rng.range(0, base.vertex_count() - 1),
                                           rng.range(1, 2));
        if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
        const OrientedGraph o = build(g);
        for (const auto& cls : maximal_smodules(g)) {
            std::set<std::vector<int>> outs;
            for (int v : cls) CHECK(outs.insert(o.out_neighbors(v)).second);
            const int degree = module_neighborhood(g, cls).degree;
            const bool bounded = degree >= 63 || cls.size() <= (std::uint64_t{1} << degree);
            CHECK(bounded);
        }
        ++done;
    }
}

TEST_CASE("arc reversal repair triggers and certifies") {
    // Probe sduo-free positive graphs whose out-star placement at the removal
    // vertex is decomposable; build must repair them by reversing one arc.
    testsupport::Rng rng(43);
    int repaired = 0;
    for (int iter = 0; iter < 4000 && repaired < 3; ++iter) {
        const Graph g = testsupport::random_connected_graph(rng, rng.range(5, 9), 0.35);
        if (!is_sduo_free(g)) continue;
        if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
        if (primality(g).prime) continue;
        const int x = select_removal_vertex(g);
        const auto sub = induced_subgraph(g, detail::vertices_except(g.vertex_count(), {x}));
        if (!sduos(sub.graph).empty()) continue;
        if (sub.graph == complete(4)) continue;
        const auto hood = g.neighbors(x);
        if (static_cast<int>(hood.size()) == g.vertex_count() - 1) continue;
        // Reproduce the first candidate of the construction.
        const OrientedGraph inner = build_sduo_free(sub.graph);
        std::vector<std::pair<int, int>> arcs;
        for (auto [a, b] : inner.arcs()) arcs.emplace_back(sub.vertex_map[a], sub.vertex_map[b]);
        for (int y : hood) arcs.emplace_back(x, y);
        if (primality(OrientedGraph(g.vertex_count(), std::move(arcs))).prime) continue;
        check_certificate(g, build_sduo_free(g));
        ++repaired;
    }
    CHECK(repaired == 3);
}

TEST_CASE("build_sduo_free rejects precondition violations") {
    CHECK_THROWS_AS(build_sduo_free(path(3)), PreconditionError);     // has a stable duo
    CHECK_THROWS_AS(build_sduo_free(complete(4)), PreconditionError);
    CHECK_THROWS_AS(build_sduo_free(complete(2)), PreconditionError);
    CHECK_THROWS_AS(build_sduo_free(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("certified_decision attaches the certificate") {
    const Decision positive = certified_decision(complete(5));
    CHECK(positive.verdict == Verdict::PrimarilyOrientable);
    REQUIRE(positive.certificate.has_value());
    check_certificate(complete(5), *positive.certificate);

    const Decision negative = certified_decision(star(3));
    CHECK_FALSE(negative.certificate.has_value());
    CHECK(negative.reason->kind == ReasonKind::SmoduleDegreeViolation);
}

TEST_CASE("build is deterministic") {
    testsupport::Rng rng(44);
    for (int iter = 0; iter < 40; ++iter) {
        const Graph g = testsupport::random_connected_graph(rng, rng.range(3, 10), 0.5);
        if (decide(g).verdict != Verdict::PrimarilyOrientable) continue;
        CHECK(arc_signature(build(g)) == arc_signature(build(g)));
        CHECK(arc_signature(build(g, {.prime_shortcut = false})) ==
              arc_signature(build(g, {.prime_shortcut = false})));
    }
    CHECK(arc_signature(build(complete(7))) == arc_signature(build(complete(7))));
}

TEST_CASE("decide matches the oracle across every graph on up to five vertices") {
    for (int n = 3; n <= 5; ++n) {
        const SweepReport report = sweep_all_graphs(n);
        CHECK(report.disagreements.empty());
    }
}
