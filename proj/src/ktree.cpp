#include "sodd/ktree.hpp"

#include <algorithm>
#include <set>

#include "sodd/errors.hpp"

namespace sodd {

namespace {

std::string set_str(const VertexSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

}  // namespace

KTree::KTree(const KTreeSeq& seq) : k_(seq.k), seq_(seq) {
    require(seq.k >= 0, "InvalidStep", "k must be nonnegative");
    require(static_cast<int>(seq.initial.size()) == seq.k, "InvalidStep",
            "initial clique must have exactly k vertices");
    const int n = seq.n();
    for (int i = 0; i < seq.k; ++i)
        require(seq.initial[i] == i, "InvalidStep", "initial clique ids must be 0..k-1");
    back_.assign(n, {});
    children_.assign(n, {});
    GraphBuilder b(n);
    std::vector<std::set<int>> adj(n);
    for (int i = 0; i < seq.k; ++i)
        for (int j = 0; j < i; ++j) {
            back_[i].push_back(j);
            adj[i].insert(j);
            adj[j].insert(i);
            b.add_edge(i, j);
        }
    for (std::size_t s = 0; s < seq.steps.size(); ++s) {
        const auto& st = seq.steps[s];
        const int v = seq.k + static_cast<int>(s);
        require(st.v == v, "InvalidStep",
                "step " + std::to_string(s) + " introduces " + std::to_string(st.v) + ", expected " +
                    std::to_string(v));
        VertexSet p = st.parents;
        std::sort(p.begin(), p.end());
        require(static_cast<int>(p.size()) == seq.k, "InvalidStep",
                "vertex " + std::to_string(v) + " has " + std::to_string(p.size()) + " parents, expected k");
        require(std::adjacent_find(p.begin(), p.end()) == p.end(), "InvalidStep", "repeated parent");
        for (int x : p) require(x >= 0 && x < v, "InvalidStep", "parent " + std::to_string(x) + " does not exist yet");
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                require(adj[p[i]].count(p[j]) > 0, "InvalidStep",
                        "parents " + set_str(p) + " of vertex " + std::to_string(v) + " are not a clique");
        for (int x : p) {
            adj[v].insert(x);
            adj[x].insert(v);
            b.add_edge(v, x);
            children_[x].push_back(v);
        }
        back_[v] = p;
    }
    graph_ = b.build();
}

VertexSet KTree::represented_clique(int v) const {
    VertexSet q = back_[v];
    q.push_back(v);
    std::sort(q.begin(), q.end());
    return q;
}

int KTree::representative(const VertexSet& clique) const {
    if (clique.empty()) return -1;
    VertexSet q = clique;
    std::sort(q.begin(), q.end());
    const int x = q.back();
    if (!is_step(x) || static_cast<int>(q.size()) != k_ + 1) return -1;
    return represented_clique(x) == q ? x : -1;
}

std::vector<VertexSet> KTree::k_cliques() const {
    std::vector<VertexSet> r;
    r.push_back(seq_.initial);
    for (int v = k_; v < n(); ++v) {
        const auto& p = back_[v];
        for (std::size_t drop = 0; drop < p.size(); ++drop) {
            VertexSet q;
            for (std::size_t i = 0; i < p.size(); ++i)
                if (i != drop) q.push_back(p[i]);
            q.push_back(v);
            std::sort(q.begin(), q.end());
            r.push_back(q);
        }
    }
    return r;
}

Graph build_ktree(const KTreeSeq& seq) { return KTree(seq).graph(); }

std::vector<int> Layering::layer_of(int n) const {
    std::vector<int> r(n, -1);
    for (int d = 0; d < count(); ++d)
        for (int v : layers[d])
            if (v >= 0 && v < n) r[v] = d;
    return r;
}

Layering bfs_layering(const KTree& t) {
    require(t.k() >= 1, "InvalidArgument", "BFS layering needs k >= 1");
    std::vector<int> dist(t.n());
    int maxd = 0;
    for (int v = 0; v < t.n(); ++v) {
        if (!t.is_step(v)) {
            dist[v] = 1;
        } else {
            int best = dist[t.parents(v)[0]];
            for (int p : t.parents(v)) best = std::min(best, dist[p]);
            dist[v] = best + 1;
        }
        maxd = std::max(maxd, dist[v]);
    }
    Layering lay;
    lay.kind = LayeringKind::BFS;
    lay.layers.assign(maxd, {});
    for (int v = 0; v < t.n(); ++v) lay.layers[dist[v] - 1].push_back(v);
    return lay;
}

Layering bfs_layering(const KTreeSeq& seq) { return bfs_layering(KTree(seq)); }

Completion layer_completion(const KTree& t, VertexSet u) {
    const int k = t.k();
    require(k >= 1, "InvalidArgument", "completion needs k >= 1");
    std::sort(u.begin(), u.end());
    Completion c;
    c.padding = k - 1;
    for (int i = 0; i < c.padding; ++i) c.to_orig.push_back(-1);
    for (int v : u) {
        c.from_orig[v] = static_cast<int>(c.to_orig.size());
        c.to_orig.push_back(v);
    }
    KTreeSeq seq;
    seq.k = k - 1;
    for (int i = 0; i < c.padding; ++i) seq.initial.push_back(i);
    std::vector<VertexSet> tparents(c.to_orig.size());
    for (int v : u) {
        const int tv = c.from_orig[v];
        VertexSet kk;
        for (int b : t.back(v)) {
            auto it = c.from_orig.find(b);
            if (it != c.from_orig.end()) kk.push_back(it->second);
        }
        std::sort(kk.begin(), kk.end());
        require(static_cast<int>(kk.size()) <= k - 1, "NotLayerLike",
                "vertex " + std::to_string(v) + " has " + std::to_string(kk.size()) +
                    " earlier neighbors inside the set");
        VertexSet parents;
        if (kk.empty()) {
            for (int i = 0; i < c.padding; ++i) parents.push_back(i);
        } else {
            const int x = kk.back();
            VertexSet qx = tparents[x];
            qx.push_back(x);
            std::sort(qx.begin(), qx.end());
            for (int y : kk)
                require(std::binary_search(qx.begin(), qx.end(), y), "NotLayerLike",
                        "earlier neighbors of " + std::to_string(v) + " do not lie in one clique");
            parents = kk;
            for (int y : qx) {
                if (static_cast<int>(parents.size()) == k - 1) break;
                if (!std::binary_search(kk.begin(), kk.end(), y)) parents.push_back(y);
            }
            std::sort(parents.begin(), parents.end());
        }
        tparents[tv] = parents;
        seq.steps.push_back({tv, parents});
    }
    c.tree = KTree(seq);
    return c;
}

LayerComponents layer_components(const Graph& g, const Layering& lay) {
    LayerComponents lc;
    const auto layer = lay.layer_of(g.n());
    for (int d = 0; d < lay.count(); ++d) {
        auto comps = connected_components(g, lay.layers[d]);
        std::vector<VertexSet> parents;
        for (const auto& comp : comps) {
            std::set<int> p;
            if (d > 0)
                for (int v : comp)
                    for (int w : g.neighbors(v))
                        if (layer[w] == d - 1) p.insert(w);
            parents.emplace_back(p.begin(), p.end());
        }
        lc.components.push_back(std::move(comps));
        lc.parent_cliques.push_back(std::move(parents));
    }
    return lc;
}

Report validate_bfs_properties(const KTree& t, const Layering& lay) {
    Report r;
    r.checked = {"partition", "B1", "B2", "B3", "B4"};
    const Graph& g = t.graph();
    std::vector<int> count(g.n(), 0);
    for (const auto& l : lay.layers)
        for (int v : l) {
            if (v < 0 || v >= g.n()) {
                r.add("partition", {v}, "vertex id out of range");
                continue;
            }
            ++count[v];
        }
    for (int v = 0; v < g.n(); ++v)
        if (count[v] != 1) r.add("partition", {v}, "vertex appears in " + std::to_string(count[v]) + " layers");
    if (!r.pass()) return r;

    const auto layer = lay.layer_of(g.n());
    if (lay.layers.empty()) {
        r.add("B1", {}, "no layers");
    } else if (static_cast<int>(lay.layers[0].size()) != t.k() || !g.is_clique(lay.layers[0])) {
        r.add("B1", std::vector<std::int64_t>(lay.layers[0].begin(), lay.layers[0].end()),
              "first layer is not a k-clique");
    }
    for (auto [u, v] : g.edges())
        if (std::abs(layer[u] - layer[v]) > 1) r.add("B4", {u, v}, "edge spans non-adjacent layers");

    const auto lc = layer_components(g, lay);
    for (int d = 1; d < lay.count(); ++d)
        for (std::size_t c = 0; c < lc.components[d].size(); ++c) {
            const auto& p = lc.parent_cliques[d][c];
            if (static_cast<int>(p.size()) != t.k() || !g.is_clique(p))
                r.add("B2", std::vector<std::int64_t>(p.begin(), p.end()),
                      "parent set of the component containing " + std::to_string(lc.components[d][c][0]) +
                          " is not a k-clique");
        }

    for (int d = 0; d < lay.count(); ++d) {
        try {
            auto comp = layer_completion(t, lay.layers[d]);
            const Graph& tg = comp.tree.graph();
            const Graph sub = g.induced(lay.layers[d]);
            for (auto [u, v] : sub.edges()) {
                int a = comp.from_orig.at(lay.layers[d][u]);
                int b = comp.from_orig.at(lay.layers[d][v]);
                if (!tg.has_edge(a, b)) r.add("B3", {lay.layers[d][u], lay.layers[d][v]}, "completion misses an edge");
            }
        } catch (const Error& e) {
            r.add("B3", {d + 1}, e.what());
        }
    }
    return r;
}

}  // namespace sodd
