#include "sodd/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sodd/errors.hpp"

namespace sodd {

namespace {

void require_total(const Coloring& c, int n) {
    require(c.size() == n, "PartialColoring",
            "coloring has " + std::to_string(c.size()) + " entries for " + std::to_string(n) + " vertices");
    for (int v = 0; v < n; ++v)
        require(c[v] != Coloring::kUnassigned, "PartialColoring", "vertex " + std::to_string(v) + " is unassigned");
}

std::map<int, int> color_counts(const Coloring& c, const std::vector<int>& vs) {
    std::map<int, int> cnt;
    for (int u : vs) ++cnt[c[u]];
    return cnt;
}

void parity_at(Report& r, const char* prop, std::int64_t where, const std::map<int, int>& cnt,
               const MultiplicityRule& rule) {
    for (auto [col, k] : cnt)
        if (!rule.allows(k)) r.add(prop, {where, col, k});
}

}  // namespace

Report is_proper(const Graph& g, const Coloring& c) {
    require_total(c, g.n());
    Report r;
    r.checked = {"proper"};
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) r.add("proper", {u, v});
    return r;
}

Report is_improper_strong_odd(const Graph& g, const Coloring& c, const MultiplicityRule& rule) {
    rule.validate();
    require_total(c, g.n());
    Report r;
    r.checked = {"parity"};
    for (int v = 0; v < g.n(); ++v) parity_at(r, "parity", v, color_counts(c, g.neighbors(v)), rule);
    return r;
}

Report is_strong_odd(const Graph& g, const Coloring& c, const MultiplicityRule& rule) {
    Report r = is_proper(g, c);
    Report p = is_improper_strong_odd(g, c, rule);
    r.checked.push_back("parity");
    r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
    return r;
}

bool is_strong_odd_on_set(const Coloring& c, const VertexSet& m) {
    std::unordered_map<int, int> cnt;
    for (int v : m) ++cnt[c[v]];
    return std::all_of(cnt.begin(), cnt.end(), [](auto& p) { return p.second % 2 == 1; });
}

Report is_strong_odd_directed(const DiGraph& d, const Coloring& c) {
    require_total(c, d.n());
    Report r;
    r.checked = {"proper", "parity"};
    for (int v = 0; v < d.n(); ++v) {
        for (int u : d.out(v))
            if (c[u] == c[v]) r.add("proper", {v, u});
        parity_at(r, "parity", v, color_counts(c, d.out(v)), MultiplicityRule::odd());
    }
    return r;
}

Report is_odd_coloring(const Graph& g, const Coloring& c) {
    Report r = is_proper(g, c);
    r.checked.push_back("odd");
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) == 0) continue;
        auto cnt = color_counts(c, g.neighbors(v));
        if (std::none_of(cnt.begin(), cnt.end(), [](auto& p) { return p.second % 2 == 1; }))
            r.add("odd", {v}, "no color appears an odd number of times");
    }
    return r;
}

Report is_hypergraph_strong_odd(const Hypergraph& h, const Coloring& c) {
    h.validate();
    require_total(c, h.n);
    Report r;
    r.checked = {"parity"};
    for (std::size_t e = 0; e < h.hyperedges.size(); ++e)
        parity_at(r, "parity", static_cast<std::int64_t>(e), color_counts(c, h.hyperedges[e]),
                  MultiplicityRule::odd());
    return r;
}

FaceAugmentation plane_to_strong_odd(const PlaneGraph& p) {
    p.validate();
    const int n = p.graph.n();
    GraphBuilder b(n + static_cast<int>(p.faces.size()));
    for (auto [u, v] : p.graph.edges()) b.add_edge(u, v);
    FaceAugmentation fa;
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const int vf = n + static_cast<int>(f);
        fa.face_vertex.push_back(vf);
        for (int u : p.faces[f]) b.add_edge(u, vf);
    }
    fa.graph = b.build();
    return fa;
}

Report is_facially_odd(const PlaneGraph& p, const Coloring& c) {
    p.validate();
    Report r = is_proper(p.graph, c);
    r.checked.push_back("faces");
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        std::set<int> distinct(p.faces[f].begin(), p.faces[f].end());
        parity_at(r, "faces", static_cast<std::int64_t>(f),
                  color_counts(c, std::vector<int>(distinct.begin(), distinct.end())), MultiplicityRule::odd());
    }
    return r;
}

Report check_constrained(const Graph& g, const std::vector<DiGraph>& digraphs, const std::vector<VertexSet>& sets,
                         const Coloring& c) {
    Report r = is_proper(g, c);
    for (std::size_t i = 0; i < digraphs.size(); ++i) {
        require(digraphs[i].n() <= g.n(), "InputNotSubgraph", "digraph has more vertices than the graph");
        Coloring sub(std::vector<int>(c.colors.begin(), c.colors.begin() + digraphs[i].n()));
        r.merge(is_strong_odd_directed(digraphs[i], sub), "digraph" + std::to_string(i) + ".");
    }
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const std::string prop = "set" + std::to_string(j);
        r.checked.push_back(prop);
        parity_at(r, prop.c_str(), static_cast<std::int64_t>(j), color_counts(c, sets[j]), MultiplicityRule::odd());
    }
    return r;
}

Report check_clique_coloring(int n, const std::vector<VertexSet>& cliques, const std::vector<int>& colors) {
    require(cliques.size() == colors.size(), "InvalidArgument", "one color per clique expected");
    Report r;
    r.checked = {"vertex", "classes"};
    std::vector<std::map<int, int>> at(n);
    std::map<int, int> classes;
    for (std::size_t q = 0; q < cliques.size(); ++q) {
        ++classes[colors[q]];
        for (int v : cliques[q]) ++at[v][colors[q]];
    }
    for (int v = 0; v < n; ++v) parity_at(r, "vertex", v, at[v], MultiplicityRule::odd());
    for (auto [col, k] : classes)
        if (k % 2 == 0) r.add("classes", {col, k});
    return r;
}

}  // namespace sodd
