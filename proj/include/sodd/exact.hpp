#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sodd/errors.hpp"
#include "sodd/graph.hpp"

namespace sodd {

struct SolverBudget {
    int max_colors = 0;          // 0: n(G)
    std::int64_t node_limit = 0; // 0: unlimited
    double time_limit = 0;       // seconds, 0: unlimited
    int threads = 1;
    bool symmetry_breaking = true;
};

struct ConstraintSet {
    std::vector<DiGraph> digraphs;
    std::vector<VertexSet> sets;
};

// Generic instance: pairs that must differ, sets whose color counts must obey
// the rule, and sets that must contain some color an odd number of times.
struct ColoringProblem {
    int n = 0;
    std::vector<Edge> distinct;
    std::vector<VertexSet> parity_sets;
    MultiplicityRule rule;
    std::vector<VertexSet> odd_sets;
    std::vector<int> degree;  // branching order key

    static ColoringProblem proper(const Graph& g);
    static ColoringProblem strong_odd(const Graph& g, const MultiplicityRule& rule = MultiplicityRule::odd());
    static ColoringProblem improper_strong_odd(const Graph& g, const MultiplicityRule& rule = MultiplicityRule::odd());
    static ColoringProblem odd(const Graph& g);
    static ColoringProblem constrained(const Graph& g, const ConstraintSet& cs);  // throws InputNotSubgraph
};

struct SolveResult {
    int value = 0;
    Coloring witness;
    int proven_infeasible = 0;  // largest t shown infeasible (value - 1 unless value is trivial)
    std::int64_t nodes = 0;
    double seconds = 0;
};

class BudgetExceeded : public Error {
public:
    BudgetExceeded(int lower, int upper, Coloring best, std::int64_t nodes)
        : Error("BudgetExceeded", "bounds [" + std::to_string(lower) + ", " + std::to_string(upper) + "]"),
          lower(lower), upper(upper), best(std::move(best)), nodes(nodes) {}
    int lower, upper;  // certified lower bound, best witness found
    Coloring best;
    std::int64_t nodes;
};

// A coloring with colors below t, or nullopt when none exists. Throws
// BudgetExceeded (with lower = t, upper = n) when the budget runs out.
std::optional<Coloring> decide(const ColoringProblem& p, int t, const SolverBudget& budget = {},
                               std::int64_t* nodes = nullptr);
SolveResult solve_min(const ColoringProblem& p, const SolverBudget& budget = {});

SolveResult chi_so_exact(const Graph& g, const SolverBudget& budget = {},
                         const MultiplicityRule& rule = MultiplicityRule::odd());
SolveResult chi_iso_exact(const Graph& g, const SolverBudget& budget = {},
                          const MultiplicityRule& rule = MultiplicityRule::odd());
SolveResult chi_odd_exact(const Graph& g, const SolverBudget& budget = {});
SolveResult chi_exact(const Graph& g, const SolverBudget& budget = {});
SolveResult chi_so_constrained(const Graph& g, const ConstraintSet& cs, const SolverBudget& budget = {});

// Exhaustive check over colorings up to color permutation. Throws TooLarge
// when the number of candidate colorings exceeds 10^8.
bool enumerate_oracle(const Graph& g, int t, const MultiplicityRule& rule, bool proper_required);

}  // namespace sodd
