#pragma once

#include <vector>

#include "sodd/graph.hpp"
#include "sodd/ktree.hpp"
#include "sodd/report.hpp"

namespace sodd {

// (H x P) + K_t with H given by its construction sequence.
struct Summand {
    KTreeSeq ktree;
    int path_len = 1;
};

// host_clique uses ids of the partial sum built so far, new_clique local ids
// of the attached summand; entries are identified position by position.
struct Attachment {
    VertexSet host_clique;
    VertexSet new_clique;
};

struct SumDesc {
    int w = 0, k = 0, t = 0;
    std::vector<Summand> summands;
    std::vector<Attachment> attachments;  // one per summand after the first
};

// Local ids inside a summand: product vertex (v, d) is d * n(H) + v, apex i
// is n(H) * path_len + i.
Graph summand_graph(const KTree& h, int path_len, int t);

struct BuiltSum {
    Graph graph;
    std::vector<KTree> trees;                   // per summand
    std::vector<Graph> summand_graphs;          // per summand, local ids
    std::vector<std::vector<int>> to_global;    // per summand: local -> global
    std::vector<int> home;                      // global -> summand that introduced it
    std::vector<int> home_local;                // global -> local id in its home summand

    int summand_count() const { return static_cast<int>(trees.size()); }
    bool is_private(int s, int local) const { return home[to_global[s][local]] == s; }
};

// Throws InvalidAttachment.
BuiltSum build_sum(const SumDesc& desc);

// The summand layer index (0-based) of every summand under the natural layering.
std::vector<int> natural_summand_layers(const SumDesc& desc, const BuiltSum& s);
Layering natural_layering(const SumDesc& desc);
Layering natural_layering(const SumDesc& desc, const BuiltSum& s);

// A sum description of one layer. Every summand that introduces a vertex of the
// layer is copied in full; copies of vertices outside the layer are phantoms
// (to_real = -1). The real part induces exactly the layer.
struct LayerSum {
    SumDesc desc;
    BuiltSum built;
    std::vector<int> to_real;                  // layer-sum id -> id in the outer sum, or -1
    std::vector<int> from_real;                // outer id -> layer-sum id, or -1
};

LayerSum layer_sum(const SumDesc& desc, const BuiltSum& s, const Layering& lay, int layer);

Report validate_natural_properties(const SumDesc& desc, const Layering& lay);

}  // namespace sodd
