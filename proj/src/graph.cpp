#include "sodd/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "sodd/errors.hpp"

namespace sodd {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    require(n >= 0, "InvalidGraph", "negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        require(u >= 0 && v >= 0 && u < n && v < n, "InvalidGraph",
                "endpoint out of range in edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        require(u != v, "InvalidGraph", "self-loop at " + std::to_string(u));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        require(edges_[i] != edges_[i - 1], "InvalidGraph",
                "duplicate edge (" + std::to_string(edges_[i].first) + "," +
                    std::to_string(edges_[i].second) + ")");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::is_clique(const VertexSet& s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!has_edge(s[i], s[j])) return false;
    return true;
}

Graph Graph::induced(const VertexSet& vs) const {
    std::unordered_map<int, int> pos;
    for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (int w : adj_[vs[i]]) {
            auto it = pos.find(w);
            if (it != pos.end() && static_cast<int>(i) < it->second) es.emplace_back(static_cast<int>(i), it->second);
        }
    return Graph(static_cast<int>(vs.size()), es);
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ > other.n()) return false;
    for (auto [u, v] : edges_)
        if (!other.has_edge(u, v)) return false;
    return true;
}

void GraphBuilder::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
}

Graph GraphBuilder::build() const {
    auto es = edges_;
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n_, es);
}

DiGraph::DiGraph(int n, const std::vector<Edge>& arcs) : DiGraph(n) {
    for (auto [u, v] : arcs) add_arc(u, v);
}

DiGraph DiGraph::symmetric(const Graph& g) {
    DiGraph d(g.n());
    for (auto [u, v] : g.edges()) {
        d.add_arc(u, v);
        d.add_arc(v, u);
    }
    return d;
}

std::vector<Edge> DiGraph::arcs() const {
    std::vector<Edge> r;
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) r.emplace_back(u, v);
    return r;
}

std::size_t DiGraph::arc_count() const {
    std::size_t c = 0;
    for (const auto& o : out_) c += o.size();
    return c;
}

bool DiGraph::has_arc(int u, int v) const {
    if (u < 0 || u >= n_) return false;
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
}

void DiGraph::add_arc(int u, int v) {
    require(u >= 0 && v >= 0 && u < n_ && v < n_, "InvalidGraph", "arc endpoint out of range");
    require(u != v, "InvalidGraph", "self-loop arc at " + std::to_string(u));
    auto& o = out_[u];
    auto it = std::lower_bound(o.begin(), o.end(), v);
    if (it != o.end() && *it == v) return;
    o.insert(it, v);
    auto& i = in_[v];
    i.insert(std::lower_bound(i.begin(), i.end(), u), u);
}

bool DiGraph::is_subgraph_of(const Graph& g) const {
    if (n_ > g.n()) return false;
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u])
            if (!g.has_edge(u, v)) return false;
    return true;
}

void Hypergraph::validate() const {
    for (const auto& e : hyperedges) {
        require(!e.empty(), "InvalidGraph", "empty hyperedge");
        for (int v : e) require(v >= 0 && v < n, "InvalidGraph", "hyperedge member out of range");
    }
}

void PlaneGraph::validate() const {
    std::map<Edge, int> seen;
    for (const auto& f : faces) {
        require(f.size() >= 3, "InvalidPlaneGraph", "face boundary shorter than a cycle");
        std::set<int> distinct(f.begin(), f.end());
        require(distinct.size() == f.size(), "InvalidPlaneGraph", "face boundary repeats a vertex");
        for (std::size_t i = 0; i < f.size(); ++i) {
            int u = f[i], v = f[(i + 1) % f.size()];
            require(graph.has_edge(u, v), "InvalidPlaneGraph",
                    "face boundary uses a non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            ++seen[{std::min(u, v), std::max(u, v)}];
        }
    }
    for (const auto& e : graph.edges()) {
        auto it = seen.find(e);
        int c = it == seen.end() ? 0 : it->second;
        require(c == 2, "InvalidPlaneGraph",
                "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") lies on " +
                    std::to_string(c) + " face boundaries");
    }
}

bool Coloring::is_total() const {
    return std::none_of(colors.begin(), colors.end(), [](int c) { return c == kUnassigned; });
}

int Coloring::num_colors() const {
    std::set<int> s;
    for (int c : colors)
        if (c != kUnassigned) s.insert(c);
    return static_cast<int>(s.size());
}

Coloring Coloring::normalized() const {
    std::unordered_map<int, int> ids;
    Coloring r;
    r.colors.reserve(colors.size());
    for (int c : colors) {
        if (c == kUnassigned) {
            r.colors.push_back(c);
            continue;
        }
        auto [it, fresh] = ids.emplace(c, static_cast<int>(ids.size()));
        r.colors.push_back(it->second);
    }
    r.tuples = tuples;
    return r;
}

Coloring Coloring::restricted(const VertexSet& vs) const {
    Coloring r;
    for (int v : vs) {
        r.colors.push_back(colors[v]);
        if (!tuples.empty()) r.tuples.push_back(tuples[v]);
    }
    return r;
}

void MultiplicityRule::validate() const {
    require(modulus >= 1, "InvalidRule", "modulus must be positive");
    require(!residues.empty(), "InvalidRule", "residue set is empty");
    for (int r : residues) require(r >= 0 && r < modulus, "InvalidRule", "residue out of range");
    require(zero_allowed, "InvalidRule", "zero must be allowed");
}

bool MultiplicityRule::allows(int count) const {
    if (count == 0) return zero_allowed;
    int r = count % modulus;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

Graph strong_product(const Graph& h, int path_len) {
    require(path_len >= 1, "InvalidArgument", "path_len must be positive");
    const int nh = h.n();
    GraphBuilder b(nh * path_len);
    for (int d = 0; d < path_len; ++d) {
        for (auto [u, v] : h.edges()) b.add_edge(product_id(nh, u, d), product_id(nh, v, d));
        if (d + 1 < path_len) {
            for (int v = 0; v < nh; ++v) b.add_edge(product_id(nh, v, d), product_id(nh, v, d + 1));
            for (auto [u, v] : h.edges()) {
                b.add_edge(product_id(nh, u, d), product_id(nh, v, d + 1));
                b.add_edge(product_id(nh, v, d), product_id(nh, u, d + 1));
            }
        }
    }
    return b.build();
}

Graph join_with_clique(const Graph& g, int t) {
    require(t >= 0, "InvalidArgument", "t must be nonnegative");
    const int n = g.n();
    GraphBuilder b(n + t);
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (int i = 0; i < t; ++i) {
        for (int v = 0; v < n; ++v) b.add_edge(v, n + i);
        for (int j = i + 1; j < t; ++j) b.add_edge(n + i, n + j);
    }
    return b.build();
}

Graph square(const Graph& g) {
    GraphBuilder b(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int u : g.neighbors(v)) {
            if (v < u) b.add_edge(v, u);
            for (int w : g.neighbors(u))
                if (w != v) b.add_edge(v, w);
        }
    return b.build();
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph(n, es);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(g.n(), -1);
    std::deque<int> q{source};
    dist[source] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<std::vector<int>> connected_components(const Graph& g, const VertexSet& within) {
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : within) in[v] = 1;
    auto sorted = within;
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<int>> comps;
    for (int s : sorted) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace sodd
