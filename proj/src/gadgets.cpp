#include "sodd/gadgets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sodd/errors.hpp"

namespace sodd {

int Rng::below(int n) {
    require(n > 0, "InvalidArgument", "empty range");
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return static_cast<int>(x % bound);
}

int Rng::between(int lo, int hi) { return lo + below(hi - lo + 1); }

bool Rng::chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p;
}

Graph gen_gk(int k, bool tree_edges) {
    require(k >= 1, "InvalidArgument", "k must be positive");
    const int n = (1 << (k + 1)) - 1;
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) {
        if (tree_edges) b.add_edge(v, (v - 1) / 2);
        if (!gk_is_leaf(k, v)) continue;
        for (int a = (v - 1) / 2;; a = (a - 1) / 2) {
            b.add_edge(v, a);
            if (a == 0) break;
        }
    }
    return b.build();
}

Graph gen_iso_gadget(int n) {
    require(n >= 2, "InvalidArgument", "n must be at least 2");
    GraphBuilder b(2 * n);
    for (int i = 0; i < n; ++i) b.add_edge(i, n + i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int x = b.add_vertex(), y = b.add_vertex();
            for (int z : {x, y}) {
                b.add_edge(z, i);
                b.add_edge(z, j);
            }
            b.add_edge(x, y);
        }
    return b.build();
}

PartialKTree gen_random_partial_ktree(int k, int n_steps, double keep_prob, std::uint64_t seed) {
    require(k >= 0 && n_steps >= 0, "InvalidArgument", "k and n_steps must be nonnegative");
    require(keep_prob >= 0 && keep_prob <= 1, "InvalidArgument", "keep_prob must lie in [0,1]");
    Rng rng(seed);
    KTreeSeq seq;
    seq.k = k;
    for (int i = 0; i < k; ++i) seq.initial.push_back(i);
    std::vector<VertexSet> cliques{seq.initial};
    for (int s = 0; s < n_steps; ++s) {
        const int v = k + s;
        VertexSet p = cliques[rng.below(static_cast<int>(cliques.size()))];
        seq.steps.push_back({v, p});
        for (int drop = 0; drop < k; ++drop) {
            VertexSet q;
            for (int i = 0; i < k; ++i)
                if (i != drop) q.push_back(p[i]);
            q.push_back(v);
            cliques.push_back(q);
        }
    }
    const KTree t(seq);
    std::vector<Edge> kept;
    for (const auto& e : t.graph().edges())
        if (rng.chance(keep_prob)) kept.push_back(e);
    return {seq, Graph(t.n(), kept)};
}

KTreeSeq gen_random_maximal_outerplanar(int n, std::uint64_t seed) {
    require(n >= 3, "InvalidArgument", "n must be at least 3");
    Rng rng(seed);
    KTreeSeq seq;
    seq.k = 2;
    seq.initial = {0, 1};
    std::vector<Edge> free{{0, 1}};
    for (int v = 2; v < n; ++v) {
        const int i = rng.below(static_cast<int>(free.size()));
        const auto [a, b] = free[i];
        free[i] = free.back();
        free.pop_back();
        seq.steps.push_back({v, {a, b}});
        free.emplace_back(a, v);
        free.emplace_back(b, v);
    }
    return seq;
}

PlaneGraph gen_random_triangulation(int n, int flips, std::uint64_t seed) {
    require(n >= 3, "InvalidArgument", "n must be at least 3");
    Rng rng(seed);
    std::vector<std::vector<int>> faces{{0, 1, 2}, {0, 2, 1}};
    for (int v = 3; v < n; ++v) {
        const int f = rng.below(static_cast<int>(faces.size()));
        const auto [a, b, c] = std::tuple{faces[f][0], faces[f][1], faces[f][2]};
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    auto key = [](int u, int v) { return Edge{std::min(u, v), std::max(u, v)}; };
    for (int step = 0; step < flips; ++step) {
        std::map<Edge, std::vector<int>> on;
        std::map<int, int> degree;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int i = 0; i < 3; ++i) on[key(faces[f][i], faces[f][(i + 1) % 3])].push_back(f);
        for (const auto& [e, fs] : on) {
            ++degree[e.first];
            ++degree[e.second];
        }
        std::vector<Edge> edges;
        for (const auto& [e, fs] : on) edges.push_back(e);
        const auto [u, v] = edges[rng.below(static_cast<int>(edges.size()))];
        if (degree[u] <= 3 || degree[v] <= 3) continue;
        const int f1 = on[{u, v}][0], f2 = on[{u, v}][1];
        auto third = [&](int f) {
            for (int x : faces[f])
                if (x != u && x != v) return x;
            return -1;
        };
        const int a = third(f1), b = third(f2);
        if (on.count(key(a, b))) continue;
        // Orient so that f1 reads x -> y -> a.
        auto rot = [](std::vector<int> f, int first) {
            while (f[0] != first) std::rotate(f.begin(), f.begin() + 1, f.end());
            return f;
        };
        const auto g1 = rot(faces[f1], a);
        const int x = g1[1], y = g1[2];
        faces[f1] = {a, x, b};
        faces[f2] = {b, y, a};
    }
    GraphBuilder b(n);
    for (const auto& f : faces)
        for (int i = 0; i < 3; ++i) b.add_edge(f[i], f[(i + 1) % 3]);
    PlaneGraph p{b.build(), faces};
    p.validate();
    return p;
}

namespace {

// A random clique of size at most `size` inside summand i, in local ids.
VertexSet random_summand_clique(const KTree& h, int path_len, int t, int size, Rng& rng) {
    VertexSet q;
    if (h.n() > h.k() && rng.chance(0.8))
        q = h.represented_clique(h.k() + rng.below(h.n() - h.k()));
    else
        q = h.seq().initial;
    const int d = rng.below(path_len);
    VertexSet pool;
    for (int v : q) {
        pool.push_back(product_id(h.n(), v, d));
        if (d + 1 < path_len) pool.push_back(product_id(h.n(), v, d + 1));
    }
    for (int i = 0; i < t; ++i) pool.push_back(h.n() * path_len + i);
    rng.shuffle(pool);
    if (static_cast<int>(pool.size()) > size) pool.resize(size);
    return pool;
}

}  // namespace

SumDesc gen_random_sum(const SumParams& p, std::uint64_t seed) {
    require(p.w >= 0 && p.k >= 0 && p.t >= 0 && p.summands >= 1, "InvalidArgument", "bad sum parameters");
    Rng rng(seed);
    SumDesc desc;
    desc.w = p.w;
    desc.k = p.k;
    desc.t = p.t;
    BuiltSum built;
    for (int s = 0; s < p.summands; ++s) {
        Summand sm;
        sm.ktree = gen_random_partial_ktree(p.k, rng.between(0, p.max_steps), 1.0, rng.next()).seq;
        sm.path_len = rng.between(1, std::max(1, p.max_path));
        const int size = sm.ktree.n() * sm.path_len + p.t;
        if (s > 0 && built.graph.n() + size > p.max_vertices) break;
        if (s == 0 && size > p.max_vertices) {
            sm.ktree.steps.clear();
            sm.path_len = 1;
        }
        if (s > 0) {
            const KTree h(sm.ktree);
            const int want = rng.chance(0.2) ? 0 : rng.between(std::min(1, p.w), p.w);
            const int host = rng.chance(0.5) ? built.summand_count() - 1 : rng.below(built.summand_count());
            VertexSet hq = random_summand_clique(built.trees[host], desc.summands[host].path_len, p.t, want, rng);
            VertexSet nq = random_summand_clique(h, sm.path_len, p.t, want, rng);
            const std::size_t sz = std::min(hq.size(), nq.size());
            hq.resize(sz);
            nq.resize(sz);
            for (int& x : hq) x = built.to_global[host][x];
            desc.attachments.push_back({hq, nq});
        }
        desc.summands.push_back(sm);
        built = build_sum(desc);
    }
    return desc;
}

Graph random_subgraph(const Graph& g, double keep_prob, Rng& rng) {
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (rng.chance(keep_prob)) kept.push_back(e);
    return Graph(g.n(), kept);
}

DiGraph random_digraph(const Graph& g, double arc_prob, Rng& rng) {
    DiGraph d(g.n());
    for (auto [u, v] : g.edges()) {
        if (rng.chance(arc_prob)) d.add_arc(u, v);
        if (rng.chance(arc_prob)) d.add_arc(v, u);
    }
    return d;
}

VertexSet random_set(int n, double prob, Rng& rng) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if (rng.chance(prob)) s.push_back(v);
    return s;
}

std::vector<VertexSet> random_sum_cliques(const SumDesc& desc, const BuiltSum& s, int per_summand, Rng& rng) {
    std::set<VertexSet> seen;
    std::vector<VertexSet> out;
    for (int i = 0; i < s.summand_count(); ++i)
        for (int r = 0; r < per_summand; ++r) {
            const int cap = 2 * (desc.k + 1) + desc.t;
            VertexSet q = random_summand_clique(s.trees[i], desc.summands[i].path_len, desc.t, rng.between(1, cap), rng);
            if (q.empty()) continue;
            for (int& x : q) x = s.to_global[i][x];
            std::sort(q.begin(), q.end());
            if (seen.insert(q).second) out.push_back(q);
        }
    return out;
}

}  // namespace sodd
