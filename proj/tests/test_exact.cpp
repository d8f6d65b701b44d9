#include <doctest.h>

#include "sodd/errors.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/verifier.hpp"

using namespace sodd;

TEST_CASE("chi_so of small graphs") {
    CHECK(chi_so_exact(complete_graph(4)).value == 4);
    const auto g1 = chi_so_exact(gen_gk(1));
    CHECK(g1.value == 3);
    CHECK(g1.proven_infeasible == 2);
    const auto g2 = chi_so_exact(gen_gk(2));
    CHECK(g2.value == 5);
    CHECK(g2.proven_infeasible == 4);
    CHECK(chi_so_exact(gen_gk(2, true)).value == 7);
}

TEST_CASE("chi_iso") {
    CHECK(chi_iso_exact(complete_graph(5)).value == 5);
    CHECK(chi_iso_exact(gen_iso_gadget(3)).value == 1);
    const Graph k4 = complete_graph(4);
    const int v = chi_iso_exact(k4).value;
    CHECK(enumerate_oracle(k4, v, MultiplicityRule::odd(), false));
    CHECK_FALSE(enumerate_oracle(k4, v - 1, MultiplicityRule::odd(), false));
    CHECK(v == 1);
}

TEST_CASE("constrained") {
    const Graph k5 = complete_graph(5);
    CHECK(chi_so_constrained(k5, {}).value == 5);
    const Graph e(4, {});
    CHECK(chi_so_constrained(e, {{}, {{0, 1, 2, 3}}}).value == 2);
    CHECK(chi_so_constrained(complete_graph(2), {{DiGraph::symmetric(complete_graph(2))}, {}}).value == 2);
    CHECK_THROWS_AS(chi_so_constrained(e, {{DiGraph(4, {{0, 1}})}, {}}), Error);
}

TEST_CASE("oracle") {
    const auto odd = MultiplicityRule::odd();
    CHECK_FALSE(enumerate_oracle(path_graph(3), 2, odd, true));
    CHECK(enumerate_oracle(path_graph(3), 3, odd, true));
    CHECK(enumerate_oracle(complete_graph(3), 3, odd, true));
    CHECK_FALSE(enumerate_oracle(complete_graph(3), 2, odd, true));
}

TEST_CASE("threads and symmetry breaking do not change values") {
    Rng rng(12);
    for (int s = 0; s < 20; ++s) {
        const int n = rng.between(2, 9);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(0.4)) b.add_edge(u, v);
        const Graph g = b.build();
        SolverBudget par;
        par.threads = 4;
        SolverBudget plain;
        plain.symmetry_breaking = false;
        const int v = chi_so_exact(g).value;
        CHECK(chi_so_exact(g, par).value == v);
        CHECK(chi_so_exact(g, plain).value == v);
    }
}

TEST_CASE("budgets") {
    SolverBudget b;
    b.max_colors = 2;
    try {
        chi_so_exact(path_graph(3), b);
        FAIL("expected a budget error");
    } catch (const BudgetExceeded& e) {
        CHECK(e.lower == 3);
        CHECK(is_strong_odd(path_graph(3), e.best).pass());
    }
}
