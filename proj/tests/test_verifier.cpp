#include <doctest.h>

#include "sodd/errors.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/verifier.hpp"

using namespace sodd;

TEST_CASE("properness") {
    CHECK(is_proper(complete_graph(3), Coloring({0, 1, 2})).pass());
    const Report r = is_proper(complete_graph(2), Coloring({0, 0}));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].witness == std::vector<std::int64_t>{0, 1});
    CHECK(is_proper(Graph(4, {}), Coloring::uniform(4)).pass());
}

TEST_CASE("strong odd") {
    CHECK(is_strong_odd(star_graph(3), Coloring({0, 1, 1, 1})).pass());
    const Report r = is_strong_odd(star_graph(2), Coloring({0, 1, 1}));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].witness == std::vector<std::int64_t>{0, 1, 2});
    const Graph g2 = gen_gk(2);
    CHECK(is_strong_odd(g2, chi_so_exact(g2).witness).pass());
}

TEST_CASE("sets") {
    CHECK(is_strong_odd_on_set(Coloring({5, 5, 5}), {}));
    CHECK_FALSE(is_strong_odd_on_set(Coloring({5, 5, 5}), {0, 1}));
    CHECK(is_strong_odd_on_set(Coloring({5, 5, 5}), {0, 1, 2}));
}

TEST_CASE("directed") {
    const Graph g = gen_gk(1);
    CHECK(is_strong_odd_directed(DiGraph::symmetric(g), chi_so_exact(g).witness).pass());
    CHECK_FALSE(is_strong_odd_directed(DiGraph(2, {{0, 1}}), Coloring({3, 3})).pass());
    const Report r = is_strong_odd_directed(DiGraph(3, {{0, 1}, {0, 2}}), Coloring({0, 1, 1}));
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].witness == std::vector<std::int64_t>{0, 1, 2});
}

TEST_CASE("odd colorings") {
    CHECK_FALSE(is_odd_coloring(cycle_graph(4), Coloring({0, 1, 0, 1})).pass());
    CHECK(is_odd_coloring(complete_graph(2), Coloring({0, 1})).pass());
}

TEST_CASE("strong odd implies odd on graphs without isolated vertices") {
    Rng rng(8);
    for (int s = 0; s < 40; ++s) {
        const int n = rng.between(2, 8);
        GraphBuilder b(n);
        for (int v = 1; v < n; ++v) b.add_edge(v, rng.below(v));
        for (int e = rng.below(6); e > 0; --e) {
            const int u = rng.below(n), v = rng.below(n);
            if (u != v) b.add_edge(u, v);
        }
        const Graph g = b.build();
        CHECK(is_odd_coloring(g, chi_so_exact(g).witness).pass());
    }
}

TEST_CASE("hypergraphs") {
    CHECK(is_hypergraph_strong_odd({3, {{0, 1, 2}}}, Coloring::uniform(3)).pass());
    CHECK_FALSE(is_hypergraph_strong_odd({2, {{0, 1}}}, Coloring::uniform(2)).pass());
    CHECK(is_hypergraph_strong_odd({2, {}}, Coloring::uniform(2)).pass());
}

PlaneGraph c4_plane() {
    PlaneGraph p;
    p.graph = cycle_graph(4);
    p.faces = {{0, 1, 2, 3}, {3, 2, 1, 0}};
    return p;
}

TEST_CASE("face augmentation") {
    PlaneGraph tri;
    tri.graph = complete_graph(3);
    tri.faces = {{0, 1, 2}, {2, 1, 0}};
    const auto a = plane_to_strong_odd(tri);
    CHECK(a.graph.n() == 5);
    CHECK(a.graph.m() == 9);
    const auto b = plane_to_strong_odd(c4_plane());
    CHECK(b.graph.n() == 6);
    CHECK(b.graph.m() == 12);
    PlaneGraph path;
    path.graph = path_graph(3);
    path.faces = {{0, 1, 2}};
    CHECK_THROWS_AS(path.validate(), Error);
}

TEST_CASE("facially odd") {
    PlaneGraph k4;
    k4.graph = complete_graph(4);
    k4.faces = {{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}};
    CHECK(is_facially_odd(k4, Coloring({0, 1, 2, 3})).pass());
    CHECK_FALSE(is_facially_odd(c4_plane(), Coloring({0, 1, 0, 1})).pass());
}

TEST_CASE("reports list every violation") {
    const Report r = is_proper(complete_graph(3), Coloring::uniform(3));
    CHECK(r.violations.size() == 3);
}
