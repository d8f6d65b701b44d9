#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "sodd/bounds.hpp"
#include "sodd/constructive.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/outerplanar.hpp"
#include "sodd/verifier.hpp"

using namespace sodd;

TEST_CASE("color_tw base case") {
    const KTree e(make_seq(0, {{}, {}, {}}));
    const Coloring odd = color_tw(e, {}, {{0, 1, 2}});
    CHECK(odd.num_colors() == 1);
    const KTree e4(make_seq(0, {{}, {}, {}, {}}));
    const Coloring even = color_tw(e4, {}, {{0, 1, 2, 3}});
    CHECK(even.num_colors() == 2);
    CHECK(is_strong_odd_on_set(even, {0, 1, 2, 3}));
}

TEST_CASE("color_tw on small instances is valid and not below the optimum") {
    Rng rng(21);
    for (int s = 0; s < 15; ++s) {
        const int k = 1 + s % 2;
        const auto pk = gen_random_partial_ktree(k, rng.between(0, 8 - k), 0.7, rng.next());
        const KTree t(pk.seq);
        const std::vector<DiGraph> ds{random_digraph(pk.mask, 0.6, rng)};
        const std::vector<VertexSet> ms{random_set(t.n(), 0.5, rng)};
        const Coloring c = color_tw(t, ds, ms);
        CHECK(check_constrained(pk.mask, ds, ms, c).pass());
        CHECK(c.num_colors() >= chi_so_constrained(pk.mask, {ds, ms}).value);
    }
}

TEST_CASE("clique colorings") {
    const KTree fan(make_seq(2, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(clique_coloring(fan, {}).empty());
    const auto one = clique_coloring(fan, {{1, 2, 3}});
    CHECK(one.size() == 1);
    const std::vector<VertexSet> all{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};
    const auto c = clique_coloring(fan, all);
    CHECK(check_clique_coloring(fan.n(), all, c).pass());
    CHECK(bounds().g1(2).at_least(static_cast<int>(std::set<int>(c.begin(), c.end()).size())));
}

TEST_CASE("row treewidth with one row matches a layer coloring") {
    const KTree h(make_seq(1, {{0}, {1}, {1}}));
    const Graph g = strong_product(h.graph(), 1);
    const Coloring c = color_rtw(h, 1, DiGraph::symmetric(g), {});
    CHECK(check_constrained(g, {DiGraph::symmetric(g)}, {}, c).pass());
}

TEST_CASE("summands and sums") {
    const KTree h(make_seq(1, {{0}, {0}}));
    const Graph g = summand_graph(h, 3, 2);
    const Coloring c = color_summand(h, 3, 2, DiGraph::symmetric(g), {{0, 1, 2, 3}});
    CHECK(check_constrained(g, {DiGraph::symmetric(g)}, {{0, 1, 2, 3}}, c).pass());

    SumDesc two;
    two.w = 2;
    two.k = 2;
    two.summands = {triangle(), triangle()};
    two.attachments.push_back({{0, 1}, {0, 1}});
    const Graph s = build_sum(two).graph;
    const Coloring sc = color_sum(two, DiGraph::symmetric(s), {});
    CHECK(check_constrained(s, {DiGraph::symmetric(s)}, {}, sc).pass());
}

TEST_CASE("sum clique colorings") {
    SumDesc two;
    two.w = 2;
    two.k = 2;
    two.summands = {triangle(), triangle()};
    two.attachments.push_back({{0, 1}, {0, 1}});
    const std::vector<VertexSet> qs{{0, 1, 2}, {0, 1, 3}, {0, 1}};
    const auto c = sum_clique_coloring(two, qs);
    CHECK(check_clique_coloring(4, qs, c).pass());
    const BuiltSum b = build_sum(two);
    CHECK(tag_clique(b, {0, 1}).summand == 0);
    CHECK(tag_clique(b, {1, 3}).summand == 1);
    CHECK_THROWS(tag_clique(b, {2, 3}));
}

TEST_CASE("outerplanar") {
    const auto fan = make_seq(2, {{0, 1}});
    const auto r = color_outerplanar_detailed(fan, build_ktree(fan));
    CHECK(r.coloring.num_colors() <= 8);
    CHECK(is_strong_odd(build_ktree(fan), r.coloring).pass());
    CHECK(check_outerplanar_properties(r).pass());

    const auto path = make_seq(2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    const auto p = color_outerplanar_detailed(path, build_ktree(path));
    const auto layer = p.layering.layer_of(p.host.n());
    std::vector<int> seed;
    for (int v : p.layering.layers[1]) seed.push_back(p.host_coloring[v]);
    for (std::size_t i = 3; i < seed.size(); ++i) CHECK(seed[i] == seed[i - 3]);

    const auto twice = make_seq(2, {{0, 1}, {0, 1}});
    CHECK_THROWS(color_outerplanar(twice, build_ktree(twice)));
}

TEST_CASE("claim gadget") {
    ClaimGadget g;
    g.x = 2;
    g.y = 3;
    g.v = 5;
    g.u2 = 1;
    g.w2 = 4;
    g.fan_u = 3;
    g.fan_w = 2;
    g.vu.assign(3, false);
    g.vw.assign(2, false);
    const ClaimResult r = claim_extend(g);
    CHECK(r.u == std::vector<int>{6, 7, 8});
    CHECK(r.w == std::vector<int>{8, 7});
    CHECK(claim_postconditions(g, r).empty());
}
