#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sodd {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    // Throws InvalidGraph on self-loops, duplicates or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    // Edges with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    bool is_clique(const VertexSet& s) const;

    Graph induced(const VertexSet& vs) const;  // relabels to 0..|vs|-1 in the given order
    bool is_subgraph_of(const Graph& other) const;

    std::vector<std::string> labels;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Accumulates edges, ignoring duplicates, then freezes into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}
    int add_vertex() { return n_++; }
    void add_edge(int u, int v);
    int n() const { return n_; }
    Graph build() const;

private:
    int n_;
    std::vector<Edge> edges_;
};

// Directed graph; arcs u->v and v->u may both be present.
class DiGraph {
public:
    DiGraph() = default;
    explicit DiGraph(int n) : n_(n), out_(n), in_(n) {}
    DiGraph(int n, const std::vector<Edge>& arcs);

    // Both directions of every edge.
    static DiGraph symmetric(const Graph& g);

    int n() const { return n_; }
    std::vector<Edge> arcs() const;
    std::size_t arc_count() const;
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const;
    // Adds u->v if absent. Throws on self-loops or range errors.
    void add_arc(int u, int v);
    bool is_subgraph_of(const Graph& g) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> out_, in_;
};

struct Hypergraph {
    int n = 0;
    std::vector<VertexSet> hyperedges;
    void validate() const;
};

struct PlaneGraph {
    Graph graph;
    std::vector<std::vector<int>> faces;
    // Boundaries are cycles, every edge lies on exactly two face boundaries.
    void validate() const;
};

// Total or partial assignment vertex -> color id. kUnassigned marks holes.
struct Coloring {
    static constexpr int kUnassigned = -1;

    std::vector<int> colors;
    // Optional component tuples recorded by constructive algorithms.
    std::vector<std::vector<std::int64_t>> tuples;

    Coloring() = default;
    explicit Coloring(std::vector<int> c) : colors(std::move(c)) {}
    static Coloring uniform(int n, int color = 0) { return Coloring(std::vector<int>(n, color)); }

    int size() const { return static_cast<int>(colors.size()); }
    int operator[](int v) const { return colors[v]; }
    bool is_total() const;
    int num_colors() const;  // distinct ids among assigned vertices
    // Relabels colors densely by order of first appearance.
    Coloring normalized() const;
    Coloring restricted(const VertexSet& vs) const;  // position i gets color of vs[i]
};

// Allowed neighborhood multiplicities: {0} and every s with s mod modulus in residues.
struct MultiplicityRule {
    int modulus = 2;
    std::vector<int> residues{1};
    bool zero_allowed = true;

    static MultiplicityRule odd() { return {}; }
    void validate() const;
    bool allows(int count) const;
    bool is_odd_rule() const { return modulus == 2 && residues == std::vector<int>{1}; }
};

// Constructors from graph_core. Ids: strong_product maps (v, d) to d * n(H) + v;
// join_with_clique appends the clique vertices as n(G) .. n(G)+t-1.
Graph strong_product(const Graph& h, int path_len);
Graph join_with_clique(const Graph& g, int t);
Graph square(const Graph& g);

inline int product_id(int n_h, int v, int d) { return d * n_h + v; }

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

std::vector<int> bfs_distances(const Graph& g, int source);
std::vector<std::vector<int>> connected_components(const Graph& g, const VertexSet& within);

}  // namespace sodd
