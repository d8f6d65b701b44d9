#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sodd/constructive.hpp"
#include "sodd/errors.hpp"

namespace sodd {

namespace {

constexpr std::int64_t kEmptyParent = -2;

std::vector<std::unordered_map<int, int>> local_maps(const BuiltSum& s) {
    std::vector<std::unordered_map<int, int>> r(s.summand_count());
    for (int i = 0; i < s.summand_count(); ++i)
        for (int x = 0; x < static_cast<int>(s.to_global[i].size()); ++x) r[i][s.to_global[i][x]] = x;
    return r;
}

Coloring sum_rec(const SumDesc& desc, const BuiltSum& s, const DiGraph& arcs, const std::vector<VertexSet>& ms);

std::vector<int> sum_cliques_rec(const SumDesc& desc, const BuiltSum& s, const std::vector<TaggedClique>& cliques) {
    if (cliques.empty()) return {};
    const auto locals = local_maps(s);
    struct Rec {
        std::vector<int> key;  // a1 | a2 | a3
        int rep;
    };
    std::vector<Rec> recs;
    for (const auto& tq : cliques) {
        const int si = tq.summand;
        const KTree& h = s.trees[si];
        const int nh = h.n(), np = nh * desc.summands[si].path_len;
        std::vector<int> prod_v, prod_d, apex;
        for (int x : tq.clique) {
            const int loc = locals[si].at(x);
            if (loc < np) {
                prod_v.push_back(loc % nh);
                prod_d.push_back(loc / nh);
            } else {
                apex.push_back(loc - np);
            }
        }
        VertexSet qh;
        if (!prod_v.empty() && h.is_step(*std::max_element(prod_v.begin(), prod_v.end()))) {
            qh = h.represented_clique(*std::max_element(prod_v.begin(), prod_v.end()));
        } else if (h.n() > h.k()) {
            qh = h.represented_clique(h.k());
        } else {
            qh = h.seq().initial;
        }
        const int d = prod_d.empty() ? 0 : *std::min_element(prod_d.begin(), prod_d.end());
        Rec r;
        r.key.assign(2 * (desc.k + 1) + desc.t, 0);
        for (std::size_t i = 0; i < prod_v.size(); ++i) {
            const int pos = static_cast<int>(std::find(qh.begin(), qh.end(), prod_v[i]) - qh.begin());
            require(pos < static_cast<int>(qh.size()), "Internal", "clique projection leaves its host clique");
            r.key[(prod_d[i] == d ? 0 : desc.k + 1) + pos] = 1;
        }
        for (int a : apex) r.key[2 * (desc.k + 1) + a] = 1;
        if (!qh.empty())
            r.rep = s.to_global[si][d * nh + qh.back()];
        else
            r.rep = s.to_global[si][np + *std::min_element(apex.begin(), apex.end())];
        recs.push_back(std::move(r));
    }

    // A vertex shared by several summands may represent two cliques of one
    // type; such cliques go to different rounds.
    std::map<std::pair<std::vector<int>, int>, std::vector<int>> classes;
    std::map<std::vector<int>, std::vector<std::set<int>>> used;
    for (std::size_t q = 0; q < recs.size(); ++q) {
        auto& rounds = used[recs[q].key];
        int r = 0;
        while (r < static_cast<int>(rounds.size()) && rounds[r].count(recs[q].rep)) ++r;
        if (r == static_cast<int>(rounds.size())) rounds.emplace_back();
        rounds[r].insert(recs[q].rep);
        classes[{recs[q].key, r}].push_back(static_cast<int>(q));
    }

    std::map<std::vector<std::int64_t>, int> ids;
    std::vector<int> out(cliques.size());
    const int n = s.graph.n();
    for (const auto& [cls, members] : classes) {
        DiGraph dg(n);
        VertexSet reps;
        for (int q : members) {
            const int y = recs[q].rep;
            reps.push_back(y);
            for (int x : cliques[q].clique)
                if (x != y) dg.add_arc(x, y);
        }
        const Coloring psi = sum_rec(desc, s, dg, {reps});
        const int round = cls.second;
        for (int q : members) {
            std::vector<std::int64_t> key(cls.first.begin(), cls.first.end());
            key.push_back(round);
            key.push_back(psi[recs[q].rep]);
            out[q] = ids.emplace(key, static_cast<int>(ids.size())).first->second;
        }
    }
    return out;
}

std::vector<TaggedClique> tag_all(const BuiltSum& s, const std::vector<VertexSet>& cliques) {
    std::vector<TaggedClique> r;
    for (const auto& q : cliques) r.push_back(tag_clique(s, q));
    return r;
}

Coloring sum_base(const SumDesc& desc, const BuiltSum& s, const DiGraph& arcs, const std::vector<VertexSet>& ms) {
    const int n = s.graph.n(), m = static_cast<int>(ms.size());
    std::vector<Coloring> psi(s.summand_count());
    std::vector<int> type(s.summand_count());
    std::vector<std::vector<char>> meets(s.summand_count(), std::vector<char>(m, 0));
    std::map<TypeMatrix, int> type_ids;
    for (int i = 0; i < s.summand_count(); ++i) {
        const auto& map = s.to_global[i];
        const int nf = static_cast<int>(map.size());
        DiGraph local(nf);
        for (int x = 0; x < nf; ++x)
            for (int b : arcs.out(map[x])) local.add_arc(x, s.home_local[b]);
        std::vector<VertexSet> sets(m);
        for (int j = 0; j < m; ++j)
            for (int v : ms[j])
                if (s.home[v] == i) sets[j].push_back(s.home_local[v]);
        for (int j = 0; j < m; ++j) meets[i][j] = !sets[j].empty();
        psi[i] = color_summand(s.trees[i], desc.summands[i].path_len, desc.t, local, sets);
        type[i] = type_ids.emplace(type_matrix(sets, psi[i].colors), static_cast<int>(type_ids.size())).first->second;
    }
    std::vector<int> sigma(s.summand_count());
    for (int a = 0; a < static_cast<int>(type_ids.size()); ++a) {
        std::vector<int> members;
        for (int i = 0; i < s.summand_count(); ++i)
            if (type[i] == a) members.push_back(i);
        KTreeSeq zero;
        for (std::size_t x = 0; x < members.size(); ++x) zero.steps.push_back({static_cast<int>(x), {}});
        std::vector<VertexSet> sets(m);
        for (int j = 0; j < m; ++j)
            for (std::size_t x = 0; x < members.size(); ++x)
                if (meets[members[x]][j]) sets[j].push_back(static_cast<int>(x));
        const Coloring c = color_tw(KTree(zero), {}, sets);
        for (std::size_t x = 0; x < members.size(); ++x) sigma[members[x]] = c[static_cast<int>(x)];
    }
    std::map<std::vector<std::int64_t>, int> ids;
    Coloring out;
    out.colors.resize(n);
    out.tuples.resize(n);
    for (int v = 0; v < n; ++v) {
        const int i = s.home[v];
        std::vector<std::int64_t> tup{psi[i][s.home_local[v]], type[i], sigma[i]};
        out.colors[v] = ids.emplace(tup, static_cast<int>(ids.size())).first->second;
        out.tuples[v] = std::move(tup);
    }
    return out;
}

// Restrict arcs and sets of the outer sum to the real vertices of a layer sum.
DiGraph to_layer(const LayerSum& ls, const DiGraph& arcs, const std::vector<char>& keep) {
    DiGraph d(ls.built.graph.n());
    for (int a = 0; a < ls.built.graph.n(); ++a) {
        const int ra = ls.to_real[a];
        if (ra < 0 || !keep[ra]) continue;
        for (int rb : arcs.out(ra))
            if (keep[rb] && ls.from_real[rb] >= 0) d.add_arc(a, ls.from_real[rb]);
    }
    return d;
}

VertexSet to_layer(const LayerSum& ls, const VertexSet& set, const std::vector<char>& keep) {
    VertexSet r;
    for (int v : set)
        if (keep[v] && ls.from_real[v] >= 0) r.push_back(ls.from_real[v]);
    return r;
}

Coloring sum_rec(const SumDesc& desc, const BuiltSum& s, const DiGraph& arcs, const std::vector<VertexSet>& ms) {
    if (s.graph.n() == 0) return Coloring();
    if (desc.w == 0) return sum_base(desc, s, arcs, ms);
    const Graph& g = s.graph;
    const int n = g.n(), m = static_cast<int>(ms.size());
    const Layering lay = natural_layering(desc, s);
    const auto layer_of = lay.layer_of(n);
    std::vector<LayerSum> ls;
    for (int d = 0; d < lay.count(); ++d) ls.push_back(layer_sum(desc, s, lay, d));

    std::vector<std::vector<std::int64_t>> phi(n);
    {
        std::vector<char> keep(n, 0);
        for (int v : lay.layers[0]) keep[v] = 1;
        std::vector<VertexSet> sets;
        for (const auto& mj : ms) sets.push_back(to_layer(ls[0], mj, keep));
        const Coloring c = sum_rec(ls[0].desc, ls[0].built, to_layer(ls[0], arcs, keep), sets);
        for (int v : lay.layers[0]) phi[v] = {c[ls[0].from_real[v]], -1, -1, 1};
    }

    std::map<TypeMatrix, int> type_ids;
    for (int d = 1; d < lay.count(); ++d) {
        const LayerSum& below = ls[d - 1];
        const LayerSum& here = ls[d];
        const Coloring chi = sum_rec(below.desc, below.built, DiGraph(below.built.graph.n()), {});
        std::map<VertexSet, VertexSet> kids;
        for (const auto& comp : connected_components(g, lay.layers[d])) {
            std::set<int> q;
            for (int v : comp)
                for (int u : g.neighbors(v))
                    if (layer_of[u] == d - 1) q.insert(u);
            VertexSet qv(q.begin(), q.end());
            require(static_cast<int>(qv.size()) <= desc.w && g.is_clique(qv), "Internal",
                    "parent set of a natural layer component is not a small clique");
            auto& dst = kids[qv];
            dst.insert(dst.end(), comp.begin(), comp.end());
        }
        std::map<VertexSet, std::pair<int, std::vector<std::pair<int, int>>>> info;
        std::map<int, std::vector<VertexSet>> by_type;
        for (auto& [q, u] : kids) {
            std::sort(u.begin(), u.end());
            std::vector<char> keep(n, 0);
            for (int v : u) keep[v] = 1;
            std::vector<VertexSet> sets;
            for (const auto& mj : ms) sets.push_back(to_layer(here, mj, keep));
            VertexSet order = q;
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return chi[below.from_real[a]] < chi[below.from_real[b]]; });
            std::vector<int> rows;
            for (int j = 0; j < m; ++j) rows.push_back(j);
            for (int x : order) {
                sets.push_back(to_layer(here, arcs.out(x), keep));
                rows.push_back(m + chi[below.from_real[x]]);
            }
            while (static_cast<int>(sets.size()) < m + desc.w) sets.emplace_back();
            const Coloring inner = sum_rec(here.desc, here.built, to_layer(here, arcs, keep), sets);
            TypeMatrix a;
            a.rows = -1;  // rows are indexed by set and by layer color
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int v : sets[r]) a.ones.emplace_back(rows[r], inner[v]);
            std::sort(a.ones.begin(), a.ones.end());
            a.ones.erase(std::unique(a.ones.begin(), a.ones.end()), a.ones.end());
            const int type = type_ids.emplace(a, static_cast<int>(type_ids.size())).first->second;
            auto& rec = info[q];
            rec.first = type;
            for (int v : u) rec.second.emplace_back(v, inner[here.from_real[v]]);
            if (!q.empty()) by_type[type].push_back(q);
        }
        std::map<VertexSet, std::int64_t> sigma;
        for (const auto& [type, qs] : by_type) {
            std::vector<VertexSet> mapped;
            for (const auto& q : qs) {
                VertexSet mq;
                for (int x : q) mq.push_back(below.from_real[x]);
                mapped.push_back(std::move(mq));
            }
            const auto col = sum_cliques_rec(below.desc, below.built, tag_all(below.built, mapped));
            for (std::size_t i = 0; i < qs.size(); ++i) sigma[qs[i]] = col[i];
        }
        for (const auto& [q, rec] : info) {
            const std::int64_t sg = q.empty() ? kEmptyParent : sigma.at(q);
            for (auto [v, c] : rec.second) phi[v] = {c, rec.first, sg, (d + 1) % 3};
        }
    }
    return finish_layers(phi, layer_of);
}

}  // namespace

TaggedClique tag_clique(const BuiltSum& s, const VertexSet& clique) {
    require(!clique.empty(), "UntaggedClique", "empty clique");
    require(s.graph.is_clique(clique), "UntaggedClique", "vertex set is not a clique of the sum");
    for (int i = 0; i < s.summand_count(); ++i) {
        std::unordered_map<int, int> loc;
        for (int x = 0; x < static_cast<int>(s.to_global[i].size()); ++x) loc[s.to_global[i][x]] = x;
        bool inside = true;
        for (int v : clique)
            if (!loc.count(v)) inside = false;
        if (!inside) continue;
        bool ok = true;
        for (std::size_t a = 0; a < clique.size() && ok; ++a)
            for (std::size_t b = a + 1; b < clique.size() && ok; ++b)
                ok = s.summand_graphs[i].has_edge(loc[clique[a]], loc[clique[b]]);
        if (ok) {
            VertexSet q = clique;
            std::sort(q.begin(), q.end());
            return {q, i};
        }
    }
    throw Error("UntaggedClique", "no summand contains the clique");
}

Coloring color_sum(const SumDesc& desc, const DiGraph& arcs, const std::vector<VertexSet>& sets) {
    const BuiltSum s = build_sum(desc);
    require(arcs.n() == s.graph.n(), "InputNotSubgraph", "digraph does not live on the sum");
    require(arcs.is_subgraph_of(s.graph), "InputNotSubgraph", "digraph uses a non-edge of the sum");
    std::vector<VertexSet> ms;
    for (auto set : sets) {
        for (int v : set) require(v >= 0 && v < s.graph.n(), "InputNotSubgraph", "set member out of range");
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        ms.push_back(std::move(set));
    }
    return sum_rec(desc, s, arcs, ms);
}

std::vector<int> sum_clique_coloring(const SumDesc& desc, const BuiltSum& s, const std::vector<TaggedClique>& cliques) {
    std::set<VertexSet> seen;
    for (const auto& q : cliques) {
        require(q.summand >= 0 && q.summand < s.summand_count(), "UntaggedClique", "clique has no host summand");
        VertexSet sorted = q.clique;
        std::sort(sorted.begin(), sorted.end());
        require(seen.insert(sorted).second, "InvalidArgument", "clique listed twice");
    }
    return sum_cliques_rec(desc, s, cliques);
}

std::vector<int> sum_clique_coloring(const SumDesc& desc, const std::vector<VertexSet>& cliques) {
    const BuiltSum s = build_sum(desc);
    return sum_clique_coloring(desc, s, tag_all(s, cliques));
}

}  // namespace sodd
