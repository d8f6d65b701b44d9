#pragma once

#include <unordered_map>
#include <vector>

#include "sodd/graph.hpp"
#include "sodd/report.hpp"

namespace sodd {

struct KTreeStep {
    int v = 0;
    VertexSet parents;
};

// Construction sequence. Ids are consecutive: the initial clique is 0..k-1 and
// step i introduces vertex k+i.
struct KTreeSeq {
    int k = 0;
    VertexSet initial;
    std::vector<KTreeStep> steps;

    int n() const { return static_cast<int>(initial.size() + steps.size()); }
};

// A validated k-tree together with the structure recorded during construction.
class KTree {
public:
    KTree() = default;
    explicit KTree(const KTreeSeq& seq);  // throws InvalidStep

    int k() const { return k_; }
    int n() const { return graph_.n(); }
    const Graph& graph() const { return graph_; }
    const KTreeSeq& seq() const { return seq_; }

    bool is_step(int v) const { return v >= k_; }
    // Earlier neighbors: the parent clique for a step vertex, the earlier
    // initial vertices for an initial one.
    const VertexSet& back(int v) const { return back_[v]; }
    const VertexSet& parents(int v) const { return back_[v]; }
    const std::vector<int>& children(int v) const { return children_[v]; }
    // The (k+1)-clique {v} + parents(v) represented by a step vertex, sorted.
    VertexSet represented_clique(int v) const;
    // The step vertex representing `clique`, or -1 if it is not a step clique.
    int representative(const VertexSet& clique) const;
    // Every k-clique that exists in the final graph, in creation order.
    std::vector<VertexSet> k_cliques() const;

private:
    int k_ = 0;
    KTreeSeq seq_;
    Graph graph_;
    std::vector<VertexSet> back_;
    std::vector<std::vector<int>> children_;
};

Graph build_ktree(const KTreeSeq& seq);

enum class LayeringKind { BFS, Natural };

struct Layering {
    LayeringKind kind = LayeringKind::BFS;
    std::vector<VertexSet> layers;  // layers[0] is L_1

    int count() const { return static_cast<int>(layers.size()); }
    // layer index (0-based) per vertex, -1 if missing.
    std::vector<int> layer_of(int n) const;
};

// Distances to a virtual root adjacent to the initial clique (root excluded).
Layering bfs_layering(const KTree& t);
Layering bfs_layering(const KTreeSeq& seq);

// A (k-1)-tree containing G[U] for a vertex set U of a k-tree whose members
// have at most k-1 earlier neighbors inside U (true for every BFS layer and
// every union of layer components). The first k-1 vertices are padding.
struct Completion {
    KTree tree;
    std::vector<int> to_orig;                 // tree id -> original id, -1 for padding
    std::unordered_map<int, int> from_orig;   // original id -> tree id
    int padding = 0;
};

Completion layer_completion(const KTree& t, VertexSet u);

// Parent clique (neighbors in the previous layer) of each component of each layer.
struct LayerComponents {
    std::vector<std::vector<VertexSet>> components;     // per layer
    std::vector<std::vector<VertexSet>> parent_cliques; // per layer, aligned with components
};
LayerComponents layer_components(const Graph& g, const Layering& lay);

Report validate_bfs_properties(const KTree& t, const Layering& lay);

}  // namespace sodd
