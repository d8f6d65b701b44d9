#pragma once

#include <vector>

#include "sodd/graph.hpp"
#include "sodd/ktree.hpp"
#include "sodd/report.hpp"

namespace sodd {

// The partially colored gadget of the outerplanar extension step. Center v has
// precolored neighbors x, y (triangle) and u2, w2 (path neighbors); u1, w1 are
// the next path vertices. Colors are in 1..8, 0 marks an absent vertex. The
// uncolored paths u3.. and w3.. continue P_u = [u1,u2,u3,..] and P_w.
struct ClaimGadget {
    int x = 0, y = 0, v = 0, u2 = 0, w2 = 0, u1 = 0, w1 = 0;
    int fan_u = 0, fan_w = 0;
    // Edges of G_A at v.
    bool vx = false, vy = false, vu2 = false, vw2 = false;
    std::vector<bool> vu, vw;  // sizes fan_u, fan_w
};

struct ClaimResult {
    std::vector<int> u, w;  // colors of u3.. and w3..
    bool fallback = false;  // the recoloring steps failed and a search was used
};

// Throws PreconditionViolated naming the failed clause.
ClaimResult claim_extend(const ClaimGadget& g);
// Empty when every postcondition holds, else the names of the failed ones.
std::vector<std::string> claim_postconditions(const ClaimGadget& g, const ClaimResult& r);

struct OuterplanarColoring {
    Coloring coloring;  // on the original vertices, colors 1..8
    KTree host;         // padded host; original vertex x is x + 4
    Layering layering;  // BFS layering of the padded host
    Coloring host_coloring;
    Graph mask;         // G in padded ids
    int fallbacks = 0;
};

constexpr int kOuterplanarPadding = 4;

// seq must be a 2-tree in which every edge hosts at most one vertex; mask is a
// subgraph of it. Throws NotOuterplanarWitness.
OuterplanarColoring color_outerplanar_detailed(const KTreeSeq& seq, const Graph& mask);
Coloring color_outerplanar(const KTreeSeq& seq, const Graph& mask);

// O1 proper on the host, O2 distinct colors on N(v) minus the next layer,
// O3 strong odd on the mask.
Report check_outerplanar_properties(const OuterplanarColoring& r);

}  // namespace sodd
