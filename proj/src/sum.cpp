#include "sodd/sum.hpp"

#include <algorithm>
#include <set>

#include "sodd/errors.hpp"

namespace sodd {

Graph summand_graph(const KTree& h, int path_len, int t) {
    return join_with_clique(strong_product(h.graph(), path_len), t);
}

namespace {

bool distinct(VertexSet s) {
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

BuiltSum build_sum(const SumDesc& desc) {
    require(desc.w >= 0 && desc.k >= 0 && desc.t >= 0, "InvalidArgument", "w, k, t must be nonnegative");
    require(!desc.summands.empty(), "InvalidArgument", "a sum needs at least one summand");
    require(desc.attachments.size() + 1 == desc.summands.size(), "InvalidAttachment",
            "expected one attachment per summand after the first");
    BuiltSum b;
    std::set<Edge> edges;
    int n = 0;
    auto has = [&](int u, int v) { return edges.count({std::min(u, v), std::max(u, v)}) > 0; };
    for (std::size_t s = 0; s < desc.summands.size(); ++s) {
        const auto& sm = desc.summands[s];
        require(sm.ktree.k == desc.k, "InvalidArgument",
                "summand " + std::to_string(s) + " has k=" + std::to_string(sm.ktree.k));
        require(sm.path_len >= 1, "InvalidArgument", "path_len must be positive");
        b.trees.emplace_back(sm.ktree);
        b.summand_graphs.push_back(summand_graph(b.trees.back(), sm.path_len, desc.t));
        const Graph& f = b.summand_graphs.back();
        std::vector<int> map(f.n(), -1);
        if (s > 0) {
            const auto& a = desc.attachments[s - 1];
            const std::string where = "attachment of summand " + std::to_string(s);
            require(a.host_clique.size() == a.new_clique.size(), "InvalidAttachment", where + ": sizes differ");
            require(static_cast<int>(a.host_clique.size()) <= desc.w, "InvalidAttachment",
                    where + ": clique larger than w");
            require(distinct(a.host_clique) && distinct(a.new_clique), "InvalidAttachment",
                    where + ": repeated vertex");
            for (int x : a.host_clique)
                require(x >= 0 && x < n, "InvalidAttachment", where + ": host vertex out of range");
            for (int x : a.new_clique)
                require(x >= 0 && x < f.n(), "InvalidAttachment", where + ": local vertex out of range");
            for (std::size_t i = 0; i < a.host_clique.size(); ++i)
                for (std::size_t j = i + 1; j < a.host_clique.size(); ++j) {
                    require(has(a.host_clique[i], a.host_clique[j]), "InvalidAttachment",
                            where + ": host side is not a clique");
                    require(f.has_edge(a.new_clique[i], a.new_clique[j]), "InvalidAttachment",
                            where + ": summand side is not a clique");
                }
            for (std::size_t i = 0; i < a.new_clique.size(); ++i) map[a.new_clique[i]] = a.host_clique[i];
        }
        for (int x = 0; x < f.n(); ++x)
            if (map[x] < 0) {
                map[x] = n++;
                b.home.push_back(static_cast<int>(s));
                b.home_local.push_back(x);
            }
        for (auto [u, v] : f.edges()) edges.insert({std::min(map[u], map[v]), std::max(map[u], map[v])});
        b.to_global.push_back(std::move(map));
    }
    b.graph = Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
    return b;
}

std::vector<int> natural_summand_layers(const SumDesc& desc, const BuiltSum& s) {
    std::vector<int> sl(s.summand_count(), 0);
    for (int i = 1; i < s.summand_count(); ++i) {
        const auto& host = desc.attachments[i - 1].host_clique;
        if (host.empty()) continue;
        int q = sl[s.home[host[0]]];
        for (int x : host) q = std::min(q, sl[s.home[x]]);
        sl[i] = q + 1;
    }
    return sl;
}

Layering natural_layering(const SumDesc& desc, const BuiltSum& s) {
    const auto sl = natural_summand_layers(desc, s);
    Layering lay;
    lay.kind = LayeringKind::Natural;
    int count = 0;
    for (int v = 0; v < s.graph.n(); ++v) count = std::max(count, sl[s.home[v]] + 1);
    lay.layers.assign(count, {});
    for (int v = 0; v < s.graph.n(); ++v) lay.layers[sl[s.home[v]]].push_back(v);
    return lay;
}

Layering natural_layering(const SumDesc& desc) { return natural_layering(desc, build_sum(desc)); }

LayerSum layer_sum(const SumDesc& desc, const BuiltSum& s, const Layering& lay, int layer) {
    const int n = s.graph.n();
    std::vector<char> in(n, 0);
    for (int v : lay.layers[layer]) in[v] = 1;
    std::vector<char> included(s.summand_count(), 0);
    for (int v = 0; v < n; ++v)
        if (in[v]) included[s.home[v]] = 1;

    LayerSum ls;
    ls.desc.k = desc.k;
    ls.desc.t = desc.t;
    ls.from_real.assign(n, -1);
    std::vector<int> order;
    int next = 0;
    for (int i = 0; i < s.summand_count(); ++i) {
        if (!included[i]) continue;
        const auto& f = s.summand_graphs[i];
        Attachment a;
        std::vector<int> ids(f.n(), -1);
        for (int x = 0; x < f.n(); ++x) {
            const int g = s.to_global[i][x];
            if (in[g] && s.home[g] != i) {
                a.host_clique.push_back(ls.from_real[g]);
                a.new_clique.push_back(x);
                ids[x] = ls.from_real[g];
            }
        }
        for (int x = 0; x < f.n(); ++x)
            if (ids[x] < 0) {
                ids[x] = next++;
                const int g = s.to_global[i][x];
                ls.to_real.push_back(in[g] ? g : -1);
                if (in[g]) ls.from_real[g] = ids[x];
            }
        ls.desc.w = std::max<int>(ls.desc.w, static_cast<int>(a.host_clique.size()));
        if (!order.empty()) ls.desc.attachments.push_back(std::move(a));
        ls.desc.summands.push_back(desc.summands[i]);
        order.push_back(i);
    }
    ls.built = build_sum(ls.desc);
    // build_sum assigns fresh ids in the same order as above
    return ls;
}

Report validate_natural_properties(const SumDesc& desc, const Layering& lay) {
    Report r;
    r.checked = {"partition", "N1", "N2", "N3", "N4"};
    const BuiltSum s = build_sum(desc);
    const Graph& g = s.graph;
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
    if (!r.pass() || lay.layers.empty()) {
        if (lay.layers.empty()) r.add("N1", {}, "no layers");
        return r;
    }

    const auto layer = lay.layer_of(g.n());
    for (auto [u, v] : g.edges())
        if (std::abs(layer[u] - layer[v]) > 1) r.add("N4", {u, v}, "edge spans non-adjacent layers");

    const auto lc = layer_components(g, lay);
    for (int d = 1; d < lay.count(); ++d)
        for (std::size_t c = 0; c < lc.components[d].size(); ++c) {
            const auto& p = lc.parent_cliques[d][c];
            if (static_cast<int>(p.size()) > desc.w || !g.is_clique(p))
                r.add("N2", std::vector<std::int64_t>(p.begin(), p.end()),
                      "parent set of the component containing " + std::to_string(lc.components[d][c][0]));
        }

    for (int d = 0; d < lay.count(); ++d) {
        const int limit = d == 0 ? 0 : desc.w - 1;
        const std::string prop = d == 0 ? "N1" : "N3";
        if (lay.layers[d].empty()) continue;
        LayerSum ls;
        try {
            ls = layer_sum(desc, s, lay, d);
        } catch (const Error& e) {
            r.add(prop, {d + 1}, e.what());
            continue;
        }
        for (std::size_t i = 0; i < ls.desc.attachments.size(); ++i)
            if (static_cast<int>(ls.desc.attachments[i].host_clique.size()) > limit)
                r.add(prop, {d + 1, static_cast<std::int64_t>(i + 1)},
                      "layer sum glues on a clique of size " +
                          std::to_string(ls.desc.attachments[i].host_clique.size()));
        for (int a = 0; a < ls.built.graph.n(); ++a) {
            if (ls.to_real[a] < 0) continue;
            for (int b : g.neighbors(ls.to_real[a]))
                if (layer[b] == d && !ls.built.graph.has_edge(a, ls.from_real[b]))
                    r.add(prop, {ls.to_real[a], b}, "layer edge missing from the layer sum");
        }
    }
    return r;
}

}  // namespace sodd
