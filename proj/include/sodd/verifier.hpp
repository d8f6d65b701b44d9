#pragma once

#include <vector>

#include "sodd/graph.hpp"
#include "sodd/report.hpp"

namespace sodd {

// Witness layouts: "proper" -> (u, v); parity properties -> (v, color, count);
// set parity -> (set index, color, count); faces -> (face index, color, count).

Report is_proper(const Graph& g, const Coloring& c);
Report is_strong_odd(const Graph& g, const Coloring& c, const MultiplicityRule& rule = MultiplicityRule::odd());
bool is_strong_odd_on_set(const Coloring& c, const VertexSet& m);
Report is_strong_odd_directed(const DiGraph& d, const Coloring& c);
Report is_odd_coloring(const Graph& g, const Coloring& c);
// Parity without properness.
Report is_improper_strong_odd(const Graph& g, const Coloring& c, const MultiplicityRule& rule = MultiplicityRule::odd());
Report is_hypergraph_strong_odd(const Hypergraph& h, const Coloring& c);

struct FaceAugmentation {
    Graph graph;
    std::vector<int> face_vertex;  // face index -> new vertex id (n(P) + index)
};
FaceAugmentation plane_to_strong_odd(const PlaneGraph& p);
Report is_facially_odd(const PlaneGraph& p, const Coloring& c);

// Proper on g, strong odd on each digraph, strong odd on each set.
// Properties are named "proper", "digraph<i>", "set<j>".
Report check_constrained(const Graph& g, const std::vector<DiGraph>& digraphs, const std::vector<VertexSet>& sets,
                         const Coloring& c);

// Clique coloring properties: strong odd on the cliques through each vertex
// ("vertex", witness (v, color, count)) and odd color classes ("classes").
Report check_clique_coloring(int n, const std::vector<VertexSet>& cliques, const std::vector<int>& colors);

}  // namespace sodd
