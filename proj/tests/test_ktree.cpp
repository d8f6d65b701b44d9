#include <doctest.h>

#include "helpers.hpp"
#include "sodd/errors.hpp"
#include "sodd/gadgets.hpp"

using namespace sodd;

TEST_CASE("k-tree construction") {
    CHECK(build_ktree(make_seq(1, {{0}, {1}})) == path_graph(3));
    const Graph fan = build_ktree(make_seq(2, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(fan == Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
    const Graph e = build_ktree(make_seq(0, {{}, {}}));
    CHECK(e.n() == 2);
    CHECK(e.m() == 0);
}

TEST_CASE("k-tree edge count") {
    Rng rng(2);
    for (int s = 0; s < 30; ++s) {
        const int k = rng.between(0, 4), steps = rng.between(0, 20);
        const auto pk = gen_random_partial_ktree(k, steps, 1.0, rng.next());
        CHECK(build_ktree(pk.seq).m() == static_cast<std::size_t>(k * (k - 1) / 2 + k * steps));
    }
}

TEST_CASE("invalid steps") {
    CHECK_THROWS_AS(KTree(make_seq(2, {{0, 1}, {0, 5}})), Error);
    CHECK_THROWS_AS(KTree(make_seq(2, {{0}})), Error);
    CHECK_THROWS_AS(KTree(make_seq(2, {{0, 1}, {1, 2}, {0, 3}})), Error);
}

TEST_CASE("BFS layering") {
    const Layering p3 = bfs_layering(make_seq(1, {{0}, {1}}));
    CHECK(p3.layers == std::vector<VertexSet>{{0}, {1}, {2}});
    const KTree fan(make_seq(2, {{0, 1}, {1, 2}, {2, 3}}));
    const Layering lay = bfs_layering(fan);
    CHECK(lay.layers == std::vector<VertexSet>{{0, 1}, {2, 3}, {4}});
    CHECK(validate_bfs_properties(fan, lay).pass());
}

TEST_CASE("BFS layers match distances from a root on the initial clique") {
    Rng rng(4);
    for (int s = 0; s < 30; ++s) {
        const int k = rng.between(1, 3);
        const KTree t(gen_random_partial_ktree(k, rng.between(0, 25), 1.0, rng.next()).seq);
        GraphBuilder b(t.n() + 1);
        for (auto [u, v] : t.graph().edges()) b.add_edge(u, v);
        for (int i = 0; i < k; ++i) b.add_edge(t.n(), i);
        const auto dist = bfs_distances(b.build(), t.n());
        const auto layer = bfs_layering(t).layer_of(t.n());
        for (int v = 0; v < t.n(); ++v) CHECK(layer[v] + 1 == dist[v]);
    }
}

TEST_CASE("BFS layering of random k-trees passes validation") {
    Rng rng(3);
    for (int s = 0; s < 30; ++s) {
        const KTree t(gen_random_partial_ktree(rng.between(1, 3), rng.between(0, 30), 1.0, rng.next()).seq);
        CHECK(validate_bfs_properties(t, bfs_layering(t)).pass());
    }
}

TEST_CASE("broken layerings are reported") {
    const KTree p4(make_seq(1, {{0}, {1}, {2}}));
    Layering merged;
    merged.layers = {{0, 2}, {1}, {3}};
    const Report r = validate_bfs_properties(p4, merged);
    CHECK_FALSE(r.passes("B4"));
    for (const auto& v : r.violations)
        if (v.property == "B4") CHECK(v.witness == std::vector<std::int64_t>{2, 3});
    const KTree fan(make_seq(2, {{0, 1}, {1, 2}, {2, 3}}));
    Layering l1;
    l1.layers = {{0, 4}, {1, 2, 3}};
    CHECK_FALSE(validate_bfs_properties(fan, l1).passes("B1"));
}

TEST_CASE("sums") {
    SumDesc one;
    one.w = 2;
    one.k = 2;
    one.summands = {triangle()};
    CHECK(build_sum(one).graph == complete_graph(3));

    SumDesc two = one;
    two.summands.push_back(triangle());
    two.attachments.push_back({{0, 1}, {0, 1}});
    const Graph g = build_sum(two).graph;
    CHECK(g.n() == 4);
    CHECK(g.m() == 5);

    SumDesc disjoint = one;
    disjoint.summands.push_back(triangle());
    disjoint.attachments.push_back({{}, {}});
    CHECK(build_sum(disjoint).graph.m() == 6);
}

TEST_CASE("natural layering") {
    SumDesc one;
    one.w = 2;
    one.k = 2;
    one.summands = {triangle()};
    CHECK(natural_layering(one).layers == std::vector<VertexSet>{{0, 1, 2}});

    SumDesc two = one;
    two.summands.push_back(triangle());
    two.attachments.push_back({{0, 1}, {0, 1}});
    const Layering lay = natural_layering(two);
    CHECK(lay.layers == std::vector<VertexSet>{{0, 1, 2}, {3}});
    CHECK(validate_natural_properties(two, lay).pass());

    SumDesc loose = two;
    loose.summands.push_back(triangle());
    loose.attachments.push_back({{}, {}});
    CHECK(natural_layering(loose).layers[0] == VertexSet{0, 1, 2, 4, 5, 6});
}

TEST_CASE("natural layering of random sums passes validation") {
    for (int s = 0; s < 30; ++s) {
        SumParams p;
        p.w = s % 3;
        const SumDesc d = gen_random_sum(p, 100 + s);
        const Layering lay = natural_layering(d);
        CHECK(validate_natural_properties(d, lay).pass());
        if (lay.count() > 1) {
            Layering moved = lay;
            const int v = moved.layers[1].back();
            moved.layers[1].pop_back();
            moved.layers[0].push_back(v);
            CHECK_FALSE(validate_natural_properties(d, moved).pass());
        }
    }
}
