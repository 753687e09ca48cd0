#include "doctest.h"
#include "primor/generators.hpp"
#include "primor/modules.hpp"
#include "primor/orientation.hpp"
#include "support.hpp"

using namespace primor;

TEST_CASE("half graph edge sets") {
    CHECK(half_graph(1).edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(half_graph(2).edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {2, 3}});
    CHECK(half_graph(3).edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {0, 5}, {2, 3}, {2, 5}, {4, 5}});
    CHECK(half_graph(4).vertex_count() == 8);
    CHECK(half_graph(4).edge_count() == 10);
    CHECK_THROWS_AS(half_graph(0), DomainError);
}

TEST_CASE("star, complete, path, cycle") {
    CHECK(star(3).edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(star(1) == path(2));
    CHECK(star(4).edge_count() == 4);
    CHECK(complete(4).edge_count() == 6);
    CHECK(complete(1).vertex_count() == 1);
    CHECK(path(1).edge_count() == 0);
    CHECK(path(4).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(cycle(3) == complete(3));
    CHECK(cycle(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle(2), DomainError);
    CHECK_THROWS_AS(path(0), DomainError);
    CHECK_THROWS_AS(star(0), DomainError);
    CHECK_THROWS_AS(complete(0), DomainError);
}

TEST_CASE("path on four vertices is the half graph on four vertices, relabeled") {
    CHECK(find_graph_isomorphism(path(4), half_graph(2)).has_value());
}

TEST_CASE("erdos_renyi endpoints and determinism") {
    CHECK(erdos_renyi(6, 0.0, 7) == Graph(6, {}));
    CHECK(erdos_renyi(6, 1.0, 7) == complete(6));
    CHECK(erdos_renyi(9, 0.4, 123) == erdos_renyi(9, 0.4, 123));
    CHECK(erdos_renyi(9, 0.4, 123) != erdos_renyi(9, 0.4, 124));
    CHECK_THROWS_AS(erdos_renyi(3, 1.5, 0), DomainError);
    CHECK_THROWS_AS(erdos_renyi(3, -0.1, 0), DomainError);
}

TEST_CASE("half graphs are prime and critical") {
    for (int n = 2; n <= 6; ++n) {
        const Graph g = half_graph(n);
        CHECK(primality(g).prime);
        CHECK(is_connected(g));
        CHECK(is_sduo_free(g));
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto sub = induced_subgraph(g, detail::vertices_except(g.vertex_count(), {v}));
            CHECK_FALSE(primality(sub.graph).prime);
        }
    }
}

TEST_CASE("half graph removals: endpoints disconnect, interior leaves the known s-duo") {
    for (int n = 2; n <= 5; ++n) {
        const Graph g = half_graph(n);
        const int last = g.vertex_count() - 1;
        CHECK_FALSE(
            is_connected(induced_subgraph(g, detail::vertices_except(g.vertex_count(), {0})).graph));
        CHECK_FALSE(is_connected(
            induced_subgraph(g, detail::vertices_except(g.vertex_count(), {last})).graph));
        for (int i = 1; i < last; ++i) {
            const auto sub = induced_subgraph(g, detail::vertices_except(g.vertex_count(), {i}));
            // {i-1, i+1} is a stable duo of the remainder.
            bool found = false;
            for (auto [a, b] : sduos(sub.graph))
                if (sub.vertex_map[a] == i - 1 && sub.vertex_map[b] == i + 1) found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("stars are connected but never primarily orientable") {
    for (int n = 3; n <= 8; ++n) {
        const Graph g = star(n);
        CHECK(is_connected(g));
        const Decision d = decide(g);
        CHECK(d.verdict == Verdict::NotPrimarilyOrientable);
        REQUIRE(d.reason.has_value());
        CHECK(d.reason->kind == ReasonKind::SmoduleDegreeViolation);
    }
}

TEST_CASE("complete graphs from five vertices up are primarily orientable") {
    for (int n = 5; n <= 8; ++n)
        CHECK(decide(complete(n)).verdict == Verdict::PrimarilyOrientable);
}
