#pragma once

#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "sodd/graph.hpp"
#include "sodd/ktree.hpp"
#include "sodd/sum.hpp"

namespace sodd {

// 0-1 matrix kept as its sorted list of (row, column) ones. Columns are color
// ids of the inner coloring, so equal lists mean bitwise equal matrices.
struct TypeMatrix {
    int rows = 0;
    std::vector<std::pair<int, int>> ones;

    bool operator==(const TypeMatrix& o) const { return rows == o.rows && ones == o.ones; }
    bool operator<(const TypeMatrix& o) const { return std::tie(rows, ones) < std::tie(o.rows, o.ones); }
};

// Ones for each tracked set: (row, color of some member).
TypeMatrix type_matrix(const std::vector<VertexSet>& rows, const std::vector<int>& colors);

// Proper on the k-tree, strong odd on every digraph and every set. Empty
// digraph and set lists are padded with one empty entry each.
// Tuples: (phi1, type, clique color, layer mod 3, renamed) for k >= 1,
// (palette, split) for k = 0.
Coloring color_tw(const KTree& g, const std::vector<DiGraph>& digraphs, const std::vector<VertexSet>& sets);

// One color per clique; every clique must be Q_v for a step vertex v.
std::vector<int> clique_coloring(const KTree& g, const std::vector<VertexSet>& cliques);

// Coloring of H x P (ids d * n(H) + v), proper, strong odd on `arcs` and on
// each set. Tuples: (gamma, layer type, layer mod 3, renamed).
Coloring color_rtw(const KTree& h, int path_len, const DiGraph& arcs, const std::vector<VertexSet>& sets);

// Coloring of (H x P) + K_t. Tuples: (0, product color) or (1, apex index).
Coloring color_summand(const KTree& h, int path_len, int t, const DiGraph& arcs, const std::vector<VertexSet>& sets);

// Coloring of a (w,k,t)-sum in the ids of build_sum.
Coloring color_sum(const SumDesc& desc, const DiGraph& arcs, const std::vector<VertexSet>& sets);

// A clique of a sum tagged with the summand that hosts it.
struct TaggedClique {
    VertexSet clique;
    int summand = -1;
};
TaggedClique tag_clique(const BuiltSum& s, const VertexSet& clique);  // earliest summand; throws UntaggedClique

std::vector<int> sum_clique_coloring(const SumDesc& desc, const std::vector<VertexSet>& cliques);
std::vector<int> sum_clique_coloring(const SumDesc& desc, const BuiltSum& s, const std::vector<TaggedClique>& cliques);

// Shared final step: interns per-vertex tuples into color ids, then renames
// every color that occurs on an even number of layers on its lowest layer.
// The output tuples are the inputs plus a renamed flag.
Coloring finish_layers(const std::vector<std::vector<std::int64_t>>& phi, const std::vector<int>& layer_of);

}  // namespace sodd
