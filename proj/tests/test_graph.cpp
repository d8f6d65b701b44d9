#include <doctest.h>

#include "helpers.hpp"
#include "sodd/errors.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/graph.hpp"

using namespace sodd;

TEST_CASE("strong products") {
    CHECK(strong_product(complete_graph(1), 5) == path_graph(5));
    CHECK(strong_product(complete_graph(2), 2) == complete_graph(4));
    const Graph g = strong_product(path_graph(3), 3);
    CHECK(g.n() == 9);
    CHECK(g.m() == 20);
}

TEST_CASE("strong product neighbors stay in adjacent rows") {
    Rng rng(5);
    for (int s = 0; s < 20; ++s) {
        const auto pk = gen_random_partial_ktree(2, rng.between(0, 8), 1.0, rng.next());
        const int len = rng.between(1, 5);
        const Graph h = build_ktree(pk.seq);
        const Graph g = strong_product(h, len);
        for (auto [u, v] : g.edges()) CHECK(std::abs(u / h.n() - v / h.n()) <= 1);
    }
}

TEST_CASE("join with a clique") {
    const Graph e(3, {});
    CHECK(join_with_clique(e, 0) == e);
    CHECK(join_with_clique(complete_graph(2), 1) == complete_graph(3));
    const Graph g = join_with_clique(cycle_graph(4), 2);
    CHECK(g.n() == 6);
    CHECK(g.m() == 13);
}

TEST_CASE("squares") {
    CHECK(square(path_graph(3)) == complete_graph(3));
    CHECK(square(cycle_graph(5)) == complete_graph(5));
    CHECK(square(path_graph(5)).m() == 7);
}

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
}

TEST_CASE("multiplicity rules") {
    const auto odd = MultiplicityRule::odd();
    CHECK(odd.allows(0));
    CHECK(odd.allows(3));
    CHECK_FALSE(odd.allows(2));
    MultiplicityRule bad;
    bad.residues = {};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("gadgets") {
    const Graph g1 = gen_gk(1);
    CHECK(g1.n() == 3);
    CHECK(g1.m() == 2);
    const Graph g2 = gen_gk(2);
    CHECK(g2.n() == 7);
    CHECK(g2.m() == 8);
    CHECK(gen_gk(2, true).m() == 10);
    const Graph iso = gen_iso_gadget(3);
    CHECK(iso.n() == 12);
    for (int v = 0; v < iso.n(); ++v) CHECK(iso.degree(v) % 2 == 1);
}

TEST_CASE("generators are deterministic") {
    CHECK(build_ktree(gen_random_maximal_outerplanar(40, 9)) == build_ktree(gen_random_maximal_outerplanar(40, 9)));
    const auto a = gen_random_triangulation(10, 12, 3), b = gen_random_triangulation(10, 12, 3);
    CHECK(a.graph == b.graph);
    CHECK(a.faces == b.faces);
    CHECK(a.graph.m() == 3 * 10 - 6);
}
