#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sodd/graph.hpp"
#include "sodd/ktree.hpp"
#include "sodd/sum.hpp"

namespace sodd {

// Seeded source used by every generator. Bounded draws avoid the standard
// distributions so output does not depend on the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    int below(int n);                   // uniform in [0, n)
    int between(int lo, int hi);        // uniform in [lo, hi]
    bool chance(double p);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
    }

private:
    std::mt19937_64 eng_;
};

// Vertices of the full binary tree of height k in heap order (root 0); every
// leaf is joined to all of its ancestors. tree_edges adds parent-child edges.
Graph gen_gk(int k, bool tree_edges = false);
inline bool gk_is_leaf(int k, int v) { return v >= (1 << k) - 1; }

// V1 = 0..n-1, V4 = n..2n-1 (pendant n+i at i), then for each pair of V1 in
// lexicographic order a V2 vertex followed by its V3 twin.
Graph gen_iso_gadget(int n);

struct PartialKTree {
    KTreeSeq seq;
    Graph mask;
};
PartialKTree gen_random_partial_ktree(int k, int n_steps, double keep_prob, std::uint64_t seed);

// 2-tree in which every edge hosts at most one vertex.
KTreeSeq gen_random_maximal_outerplanar(int n, std::uint64_t seed);

// Stacked triangulation on n >= 3 vertices followed by random edge flips.
PlaneGraph gen_random_triangulation(int n, int flips, std::uint64_t seed);

struct SumParams {
    int w = 1, k = 1, t = 0;
    int summands = 3;
    int max_steps = 3;      // steps per k-tree
    int max_path = 2;
    int max_vertices = 60;  // summands are added while the sum stays below this
};
SumDesc gen_random_sum(const SumParams& p, std::uint64_t seed);

// Random constraint data over a host graph.
Graph random_subgraph(const Graph& g, double keep_prob, Rng& rng);
DiGraph random_digraph(const Graph& g, double arc_prob, Rng& rng);
VertexSet random_set(int n, double prob, Rng& rng);

// Distinct nonempty cliques of a sum, each inside one summand.
std::vector<VertexSet> random_sum_cliques(const SumDesc& desc, const BuiltSum& s, int per_summand, Rng& rng);

}  // namespace sodd
