#include <algorithm>
#include <map>
#include <set>

#include "sodd/constructive.hpp"
#include "sodd/errors.hpp"

namespace sodd {

TypeMatrix type_matrix(const std::vector<VertexSet>& rows, const std::vector<int>& colors) {
    TypeMatrix a;
    a.rows = static_cast<int>(rows.size());
    for (int r = 0; r < a.rows; ++r)
        for (int v : rows[r]) a.ones.emplace_back(r, colors[v]);
    std::sort(a.ones.begin(), a.ones.end());
    a.ones.erase(std::unique(a.ones.begin(), a.ones.end()), a.ones.end());
    return a;
}

Coloring finish_layers(const std::vector<std::vector<std::int64_t>>& phi, const std::vector<int>& layer_of) {
    const int n = static_cast<int>(phi.size());
    std::map<std::vector<std::int64_t>, int> ids;
    std::vector<int> base(n);
    for (int v = 0; v < n; ++v) base[v] = ids.emplace(phi[v], static_cast<int>(ids.size())).first->second;
    std::vector<std::set<int>> layers(ids.size());
    for (int v = 0; v < n; ++v) layers[base[v]].insert(layer_of[v]);
    std::vector<int> renamed(ids.size(), -1);
    int next = static_cast<int>(ids.size());
    for (std::size_t c = 0; c < ids.size(); ++c)
        if (layers[c].size() % 2 == 0) renamed[c] = next++;
    Coloring out;
    out.colors.resize(n);
    out.tuples.resize(n);
    for (int v = 0; v < n; ++v) {
        const int c = base[v];
        const bool split = renamed[c] >= 0 && layer_of[v] == *layers[c].begin();
        out.colors[v] = split ? renamed[c] : c;
        out.tuples[v] = phi[v];
        out.tuples[v].push_back(split ? 1 : 0);
    }
    return out.normalized();
}

namespace {

std::vector<VertexSet> dedup_sets(std::vector<VertexSet> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return sets;
}

Coloring tw_base(const KTree& t, const std::vector<VertexSet>& sets) {
    const int n = t.n();
    std::vector<VertexSet> member(n);
    for (int j = 0; j < static_cast<int>(sets.size()); ++j)
        for (int v : sets[j]) member[v].push_back(j);
    std::map<VertexSet, VertexSet> groups;
    for (int v = 0; v < n; ++v) groups[member[v]].push_back(v);
    Coloring c;
    c.colors.assign(n, 0);
    c.tuples.assign(n, {});
    int next = 0, palette = 0;
    for (const auto& [j, vs] : groups) {
        const bool split = !j.empty() && vs.size() % 2 == 0;
        for (int v : vs) {
            c.colors[v] = next;
            c.tuples[v] = {palette, 0};
        }
        if (split) {
            c.colors[vs.front()] = next + 1;
            c.tuples[vs.front()] = {palette, 1};
        }
        next += split ? 2 : 1;
        ++palette;
    }
    return c;
}

void greedy_layer_coloring(const Graph& g, const VertexSet& layer, std::vector<int>& out) {
    std::vector<int> used;
    for (int v : layer) {
        used.clear();
        for (int u : g.neighbors(v))
            if (u < v && out[u] >= 0 && std::binary_search(layer.begin(), layer.end(), u)) used.push_back(out[u]);
        int c = 0;
        while (std::find(used.begin(), used.end(), c) != used.end()) ++c;
        out[v] = c;
    }
}

Coloring tw_rec(const KTree& t, const std::vector<DiGraph>& hs, const std::vector<VertexSet>& ms);

std::vector<int> cliques_rec(const KTree& t, const std::vector<VertexSet>& cliques) {
    if (cliques.empty()) return {};
    DiGraph h(t.n());
    VertexSet reps;
    for (const auto& q : cliques) {
        const int r = t.representative(q);
        require(r >= 0, "NotAStepClique", "clique is not represented by a step vertex");
        reps.push_back(r);
        for (int p : t.parents(r)) h.add_arc(p, r);
    }
    const Coloring psi = tw_rec(t, {h}, {reps});
    std::vector<int> out;
    for (int r : reps) out.push_back(psi[r]);
    return out;
}

Coloring tw_rec(const KTree& t, const std::vector<DiGraph>& hs, const std::vector<VertexSet>& ms) {
    const int k = t.k();
    if (k == 0) return tw_base(t, ms);
    const Graph& g = t.graph();
    const int n = t.n();
    const int l = static_cast<int>(hs.size()), m = static_cast<int>(ms.size());
    const Layering lay = bfs_layering(t);
    const auto layer_of = lay.layer_of(n);
    std::vector<int> chi(n, -1);
    for (const auto& layer : lay.layers) greedy_layer_coloring(g, layer, chi);
    std::vector<std::vector<char>> in_m(m, std::vector<char>(n, 0));
    for (int j = 0; j < m; ++j)
        for (int v : ms[j]) in_m[j][v] = 1;

    std::vector<std::vector<std::int64_t>> phi(n);
    for (int v : lay.layers[0]) phi[v] = {chi[v], -1, -1, 1};

    std::map<TypeMatrix, int> type_ids;
    for (int d = 1; d < lay.count(); ++d) {
        const VertexSet& prev = lay.layers[d - 1];
        std::map<VertexSet, VertexSet> kids;
        for (const auto& comp : connected_components(g, lay.layers[d])) {
            std::set<int> q;
            for (int v : comp)
                for (int u : g.neighbors(v))
                    if (layer_of[u] == d - 1) q.insert(u);
            VertexSet qv(q.begin(), q.end());
            require(static_cast<int>(qv.size()) == k && g.is_clique(qv), "Internal",
                    "parent set of a BFS layer component is not a k-clique");
            auto& dst = kids[qv];
            dst.insert(dst.end(), comp.begin(), comp.end());
        }
        std::map<VertexSet, std::pair<int, std::vector<std::pair<int, int>>>> info;  // Q -> type, (v, phi1)
        std::map<int, std::vector<VertexSet>> by_type;
        for (auto& [q, u] : kids) {
            std::sort(u.begin(), u.end());
            const Completion comp = layer_completion(t, u);
            const int nt = comp.tree.n();
            std::vector<char> in_u(n, 0);
            for (int v : u) in_u[v] = 1;
            std::vector<DiGraph> sub;
            for (int i = 0; i < l; ++i) {
                DiGraph h(nt);
                for (int v : u)
                    for (int w : hs[i].out(v))
                        if (in_u[w]) h.add_arc(comp.from_orig.at(v), comp.from_orig.at(w));
                sub.push_back(std::move(h));
            }
            std::vector<VertexSet> sets;
            for (int j = 0; j < m; ++j) {
                VertexSet s;
                for (int v : u)
                    if (in_m[j][v]) s.push_back(comp.from_orig.at(v));
                sets.push_back(std::move(s));
            }
            VertexSet by_chi(k, -1);
            for (int x : q) by_chi[chi[x]] = x;
            for (int i = 0; i < l; ++i)
                for (int h = 0; h < k; ++h) {
                    VertexSet s;
                    for (int w : hs[i].out(by_chi[h]))
                        if (in_u[w]) s.push_back(comp.from_orig.at(w));
                    std::sort(s.begin(), s.end());
                    sets.push_back(std::move(s));
                }
            const Coloring inner = tw_rec(comp.tree, sub, sets);
            const int type = type_ids.emplace(type_matrix(sets, inner.colors), static_cast<int>(type_ids.size()))
                                 .first->second;
            auto& rec = info[q];
            rec.first = type;
            for (int v : u) rec.second.emplace_back(v, inner[comp.from_orig.at(v)]);
            by_type[type].push_back(q);
        }
        const Completion pc = layer_completion(t, prev);
        std::map<VertexSet, int> sigma;
        for (const auto& [type, qs] : by_type) {
            std::vector<VertexSet> mapped;
            for (const auto& q : qs) {
                VertexSet mq;
                for (int x : q) mq.push_back(pc.from_orig.at(x));
                std::sort(mq.begin(), mq.end());
                mapped.push_back(std::move(mq));
            }
            const auto col = cliques_rec(pc.tree, mapped);
            for (std::size_t i = 0; i < qs.size(); ++i) sigma[qs[i]] = col[i];
        }
        for (const auto& [q, rec] : info)
            for (auto [v, c] : rec.second) phi[v] = {c, rec.first, sigma.at(q), (d + 1) % 3};
    }
    return finish_layers(phi, layer_of);
}

void check_digraph(const Graph& g, const DiGraph& d, const char* what) {
    require(d.n() == g.n(), "InputNotSubgraph",
            std::string(what) + " has " + std::to_string(d.n()) + " vertices, expected " + std::to_string(g.n()));
    require(d.is_subgraph_of(g), "InputNotSubgraph", std::string(what) + " uses a non-edge");
}

void check_sets(int n, const std::vector<VertexSet>& sets) {
    for (const auto& s : sets)
        for (int v : s) require(v >= 0 && v < n, "InputNotSubgraph", "set member out of range");
}

}  // namespace

Coloring color_tw(const KTree& g, const std::vector<DiGraph>& digraphs, const std::vector<VertexSet>& sets) {
    for (const auto& d : digraphs) check_digraph(g.graph(), d, "digraph");
    check_sets(g.n(), sets);
    std::vector<DiGraph> hs = digraphs;
    if (hs.empty()) hs.emplace_back(g.n());
    auto ms = dedup_sets(sets);
    if (ms.empty()) ms.emplace_back();
    return tw_rec(g, hs, ms);
}

std::vector<int> clique_coloring(const KTree& g, const std::vector<VertexSet>& cliques) {
    std::set<VertexSet> seen;
    std::vector<VertexSet> sorted;
    for (auto q : cliques) {
        std::sort(q.begin(), q.end());
        require(seen.insert(q).second, "InvalidArgument", "clique listed twice");
        sorted.push_back(std::move(q));
    }
    return cliques_rec(g, sorted);
}

Coloring color_rtw(const KTree& h, int path_len, const DiGraph& arcs, const std::vector<VertexSet>& sets) {
    require(path_len >= 1, "InvalidArgument", "path_len must be positive");
    const int nh = h.n(), n = nh * path_len;
    require(arcs.n() == n, "InputNotSubgraph", "digraph does not live on the product");
    for (auto [a, b] : arcs.arcs()) {
        const int u = a % nh, v = b % nh, da = a / nh, db = b / nh;
        require(std::abs(da - db) <= 1 && (u == v || h.graph().has_edge(u, v)), "InputNotSubgraph",
                "arc (" + std::to_string(a) + "," + std::to_string(b) + ") is not a product edge");
    }
    check_sets(n, sets);
    const auto ms = dedup_sets(sets);
    const int m = static_cast<int>(ms.size());

    std::vector<std::vector<std::int64_t>> phi(n);
    std::vector<int> layer_of(n);
    std::map<TypeMatrix, int> type_ids;
    for (int e = 0; e < path_len; ++e) {
        DiGraph within(nh), from_below(nh), from_above(nh);
        for (int v = 0; v < nh; ++v) {
            const int a = e * nh + v;
            for (int b : arcs.out(a)) {
                const int db = b / nh, u = b % nh;
                if (db == e) within.add_arc(v, u);
            }
            for (int dn : {e - 1, e + 1}) {
                if (dn < 0 || dn >= path_len) continue;
                for (int b : arcs.out(dn * nh + v)) {
                    const int u = b % nh;
                    if (b / nh == e && u != v) (dn < e ? from_below : from_above).add_arc(v, u);
                }
            }
        }
        std::vector<VertexSet> layer_sets(m);
        for (int j = 0; j < m; ++j)
            for (int x : ms[j])
                if (x / nh == e) layer_sets[j].push_back(x % nh);
        const Coloring gamma = color_tw(h, {within, from_below, from_above}, layer_sets);
        const int type =
            type_ids.emplace(type_matrix(layer_sets, gamma.colors), static_cast<int>(type_ids.size())).first->second;
        for (int v = 0; v < nh; ++v) {
            phi[e * nh + v] = {gamma[v], type, (e + 1) % 3};
            layer_of[e * nh + v] = e;
        }
    }
    return finish_layers(phi, layer_of);
}

Coloring color_summand(const KTree& h, int path_len, int t, const DiGraph& arcs, const std::vector<VertexSet>& sets) {
    require(t >= 0, "InvalidArgument", "t must be nonnegative");
    const Graph f = summand_graph(h, path_len, t);
    check_digraph(f, arcs, "digraph");
    check_sets(f.n(), sets);
    const int np = h.n() * path_len;
    DiGraph product(np);
    for (int a = 0; a < np; ++a)
        for (int b : arcs.out(a))
            if (b < np) product.add_arc(a, b);
    std::vector<VertexSet> ps;
    for (const auto& s : sets) {
        VertexSet p;
        for (int v : s)
            if (v < np) p.push_back(v);
        ps.push_back(std::move(p));
    }
    for (int i = 0; i < t; ++i) {
        VertexSet p;
        for (int b : arcs.out(np + i))
            if (b < np) p.push_back(b);
        ps.push_back(std::move(p));
    }
    const Coloring inner = color_rtw(h, path_len, product, ps);
    const int base = inner.num_colors();
    Coloring out;
    for (int v = 0; v < np; ++v) {
        out.colors.push_back(inner[v]);
        out.tuples.push_back({0, inner[v]});
    }
    for (int i = 0; i < t; ++i) {
        out.colors.push_back(base + i);
        out.tuples.push_back({1, i});
    }
    return out;
}

}  // namespace sodd
