#include "sodd/outerplanar.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sodd/errors.hpp"
#include "sodd/verifier.hpp"

namespace sodd {

namespace {

constexpr int kX = 2, kY = 3, kV = 5, kU2 = 1, kW2 = 4;

// Gadget with colors renamed so that x, y, v, u2, w2 read 2, 3, 5, 1, 4 and
// u1 != 6, w1 != 8.
struct Canonical {
    int i = 0, j = 0;                 // u1, w1; 0 if absent
    bool has_u2 = false, has_w2 = false;
    std::array<int, 9> pre{};         // masked precolored neighbors of v per color
    std::vector<bool> mu, mw;
};

struct Search {
    const Canonical& c;
    std::vector<int> u, w;
    std::unordered_set<std::string> dead;

    // Count states: 0 none, 1 odd, 2 even.
    bool run(int side, int pos, int p2, int p1, std::array<int, 9> st) {
        const int len = side == 0 ? static_cast<int>(c.mu.size()) : static_cast<int>(c.mw.size());
        if (pos == len) {
            if (side == 0) return run(1, 0, c.j, c.has_w2 ? kW2 : 0, st);
            for (int col = 1; col <= 8; ++col)
                if (st[col] == 2) return false;
            return true;
        }
        std::string key{static_cast<char>(side), static_cast<char>(pos), static_cast<char>(p2), static_cast<char>(p1)};
        for (int col = 1; col <= 8; ++col) key.push_back(static_cast<char>(st[col]));
        if (dead.count(key)) return false;
        const bool masked = side == 0 ? c.mu[pos] : c.mw[pos];
        for (int col = 1; col <= 8; ++col) {
            if (col == kV || col == p1 || col == p2) continue;
            if (pos == 0 && col == (side == 0 ? kX : kY)) continue;
            auto nx = st;
            if (masked) nx[col] = nx[col] == 1 ? 2 : 1;
            (side == 0 ? u : w)[pos] = col;
            if (run(side, pos + 1, p1, col, nx)) return true;
        }
        dead.insert(key);
        return false;
    }
};

bool parity_ok(const Canonical& c, const std::vector<int>& u, const std::vector<int>& w) {
    auto cnt = c.pre;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (c.mu[k]) ++cnt[u[k]];
    for (std::size_t k = 0; k < w.size(); ++k)
        if (c.mw[k]) ++cnt[w[k]];
    for (int col = 1; col <= 8; ++col)
        if (cnt[col] > 0 && cnt[col] % 2 == 0) return false;
    return true;
}

int masked_count(const Canonical& c, const std::vector<int>& u, const std::vector<int>& w, int col) {
    int n = 0;
    for (std::size_t k = 0; k < u.size(); ++k) n += c.mu[k] && u[k] == col;
    for (std::size_t k = 0; k < w.size(); ++k) n += c.mw[k] && w[k] == col;
    return n;
}

bool bad(int n) { return n > 0 && n % 2 == 0; }

// Gives color `to` to the class `from` (all of it if v already sees `to`,
// else one v-neighbor of it).
void split_class(const Canonical& c, std::vector<int>& u, std::vector<int>& w, int from, int to) {
    if (c.pre[to] > 0) {
        for (int& x : u)
            if (x == from) x = to;
        for (int& x : w)
            if (x == from) x = to;
        return;
    }
    for (std::size_t k = 0; k < u.size(); ++k)
        if (c.mu[k] && u[k] == from) {
            u[k] = to;
            return;
        }
    for (std::size_t k = 0; k < w.size(); ++k)
        if (c.mw[k] && w[k] == from) {
            w[k] = to;
            return;
        }
}

bool canonical_good(const Canonical& c, const std::vector<int>& u, const std::vector<int>& w) {
    auto good = [](std::vector<int> path) {
        for (std::size_t k = 0; k < path.size(); ++k)
            for (std::size_t d = 1; d <= 2 && k + d < path.size(); ++d)
                if (path[k] && path[k + d] && path[k] == path[k + d]) return false;
        return true;
    };
    std::vector<int> pu{c.i, c.has_u2 ? kU2 : 0}, pw{c.j, c.has_w2 ? kW2 : 0};
    pu.insert(pu.end(), u.begin(), u.end());
    pw.insert(pw.end(), w.begin(), w.end());
    if (!good(pu) || !good(pw)) return false;
    if (!u.empty() && u[0] == kX) return false;
    if (!w.empty() && w[0] == kY) return false;
    return parity_ok(c, u, w);
}

ClaimResult extend_canonical(const Canonical& c) {
    const int lu = static_cast<int>(c.mu.size()), lw = static_cast<int>(c.mw.size());
    std::vector<int> u0(lu), w0(lw);
    for (int k = 0; k < lu; ++k) u0[k] = 6 + k % 3;
    for (int k = 0; k < lw; ++k) w0[k] = 8 - k % 3;
    if (parity_ok(c, u0, w0)) return {u0, w0, false};

    const bool need6 = bad(masked_count(c, u0, w0, 6));
    const bool need8 = bad(masked_count(c, u0, w0, 8));
    const bool need7 = bad(masked_count(c, u0, w0, 7));
    std::vector<int> as, bs;
    for (int a : {4, 3})
        if (!need6 || a != c.i) as.push_back(a);
    for (int b : {1, 2})
        if (!need8 || b != c.j) bs.push_back(b);
    if (!need6) as = {0};
    if (!need8) bs = {0};
    for (int a : as)
        for (int b : bs) {
            auto u1 = u0, w1 = w0;
            if (need6) split_class(c, u1, w1, 6, a);
            if (need8) split_class(c, u1, w1, 8, b);
            if (!need7) {
                if (canonical_good(c, u1, w1)) return {u1, w1, false};
                continue;
            }
            for (int cc : {3, 4}) {
                if (cc == a) continue;
                for (int dd : {1, 2}) {
                    if (dd == b) continue;
                    // u4 goes to cc and w4 to dd; the other v-neighbors of
                    // class 7 are distributed by count.
                    std::vector<std::pair<int, int>> free;
                    for (int k = 0; k < lu; ++k)
                        if (u1[k] == 7 && k != 1 && c.mu[k]) free.emplace_back(0, k);
                    for (int k = 0; k < lw; ++k)
                        if (w1[k] == 7 && k != 1 && c.mw[k]) free.emplace_back(1, k);
                    for (std::size_t take = 0; take <= free.size(); ++take) {
                        auto u2 = u1, w2 = w1;
                        for (std::size_t f = 0; f < free.size(); ++f) {
                            auto& side = free[f].first == 0 ? u2 : w2;
                            side[free[f].second] = f < take ? cc : dd;
                        }
                        for (int& x : u2)
                            if (x == 7) x = cc;
                        for (int& x : w2)
                            if (x == 7) x = dd;
                        if (canonical_good(c, u2, w2)) return {u2, w2, false};
                    }
                }
            }
        }
    Search s{c, std::vector<int>(lu), std::vector<int>(lw), {}};
    std::array<int, 9> st{};
    for (int col = 1; col <= 8; ++col)
        if (c.pre[col] > 0) st[col] = c.pre[col] % 2 ? 1 : 2;
    require(s.run(0, 0, c.i, c.has_u2 ? kU2 : 0, st), "Internal", "gadget admits no extension");
    return {s.u, s.w, true};
}

void check_pre(bool ok, const std::string& clause) { require(ok, "PreconditionViolated", clause); }

}  // namespace

ClaimResult claim_extend(const ClaimGadget& g) {
    for (int col : {g.x, g.y, g.v, g.u2, g.w2, g.u1, g.w1})
        check_pre(col >= 0 && col <= 8, "colors lie in 1..8");
    check_pre(g.x && g.y && g.v, "triangle x, y, v is colored");
    check_pre(!g.u1 || g.u2, "u1 needs u2");
    check_pre(!g.w1 || g.w2, "w1 needs w2");
    check_pre(g.fan_u >= 0 && g.fan_w >= 0, "fan lengths are nonnegative");
    check_pre(!g.fan_u || g.u2, "a u-fan needs u2");
    check_pre(!g.fan_w || g.w2, "a w-fan needs w2");
    check_pre(static_cast<int>(g.vu.size()) == g.fan_u && static_cast<int>(g.vw.size()) == g.fan_w,
              "mask sizes match the fans");
    std::vector<int> five{g.x, g.y, g.v};
    if (g.u2) five.push_back(g.u2);
    if (g.w2) five.push_back(g.w2);
    std::set<int> distinct(five.begin(), five.end());
    check_pre(distinct.size() == five.size(), "x, y, v, u2, w2 have distinct colors");
    check_pre(!g.u1 || (g.u1 != g.u2 && g.u1 != g.x), "proper at u1");
    check_pre(!g.w1 || (g.w1 != g.w2 && g.w1 != g.y), "proper at w1");
    check_pre(!g.u1 || g.u1 != g.v, "good on [u1,u2,v,w2,w1]");
    check_pre(!g.w1 || g.w1 != g.v, "good on [u1,u2,v,w2,w1]");

    std::array<int, 9> to{}, from{};
    auto bind = [&](int raw, int canon) {
        to[raw] = canon;
        from[canon] = raw;
    };
    bind(g.x, kX);
    bind(g.y, kY);
    bind(g.v, kV);
    if (g.u2) bind(g.u2, kU2);
    if (g.w2) bind(g.w2, kW2);
    auto take_free = [&](std::initializer_list<int> prefs) {
        for (int s : prefs)
            if (!from[s]) return s;
        for (int s = 1; s <= 8; ++s)
            if (!from[s]) return s;
        return 0;
    };
    if (g.u1 && !to[g.u1]) bind(g.u1, g.u1 == g.w1 ? take_free({7}) : take_free({7, 8}));
    if (g.w1 && !to[g.w1]) bind(g.w1, take_free({7, 6}));
    for (int raw = 1; raw <= 8; ++raw)
        if (!to[raw]) bind(raw, take_free({}));

    Canonical c;
    c.i = g.u1 ? to[g.u1] : 0;
    c.j = g.w1 ? to[g.w1] : 0;
    c.has_u2 = g.u2 != 0;
    c.has_w2 = g.w2 != 0;
    if (g.vx) ++c.pre[kX];
    if (g.vy) ++c.pre[kY];
    if (g.vu2 && g.u2) ++c.pre[kU2];
    if (g.vw2 && g.w2) ++c.pre[kW2];
    c.mu = g.vu;
    c.mw = g.vw;
    ClaimResult r = extend_canonical(c);
    for (int& col : r.u) col = from[col];
    for (int& col : r.w) col = from[col];
    return r;
}

std::vector<std::string> claim_postconditions(const ClaimGadget& g, const ClaimResult& r) {
    std::vector<std::string> failed;
    if (static_cast<int>(r.u.size()) != g.fan_u || static_cast<int>(r.w.size()) != g.fan_w) return {"shape"};
    bool proper = true;
    for (int col : r.u) proper &= col >= 1 && col <= 8 && col != g.v;
    for (int col : r.w) proper &= col >= 1 && col <= 8 && col != g.v;
    std::vector<int> pu{g.u1, g.u2}, pw{g.w1, g.w2};
    pu.insert(pu.end(), r.u.begin(), r.u.end());
    pw.insert(pw.end(), r.w.begin(), r.w.end());
    for (const auto& p : {pu, pw})
        for (std::size_t k = 0; k + 1 < p.size(); ++k) proper &= !p[k] || p[k] != p[k + 1];
    if (!proper) failed.push_back("proper");
    bool good = true;
    for (const auto& p : {pu, pw})
        for (std::size_t k = 0; k + 2 < p.size(); ++k) good &= !p[k] || p[k] != p[k + 2];
    if (!good) failed.push_back("good");
    std::map<int, int> cnt;
    if (g.vx) ++cnt[g.x];
    if (g.vy) ++cnt[g.y];
    if (g.vu2 && g.u2) ++cnt[g.u2];
    if (g.vw2 && g.w2) ++cnt[g.w2];
    for (int k = 0; k < g.fan_u; ++k)
        if (g.vu[k]) ++cnt[r.u[k]];
    for (int k = 0; k < g.fan_w; ++k)
        if (g.vw[k]) ++cnt[r.w[k]];
    if (std::any_of(cnt.begin(), cnt.end(), [](auto e) { return e.second % 2 == 0; }))
        failed.push_back("strong_odd");
    if (g.fan_u && r.u[0] == g.x) failed.push_back("u3");
    if (g.fan_w && r.w[0] == g.y) failed.push_back("w3");
    return failed;
}

namespace {

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

struct Host {
    const KTree& t;
    std::unordered_map<std::uint64_t, int> hosted_on;

    int hosted(int a, int b) const {
        if (a < 0 || b < 0) return -1;
        auto it = hosted_on.find(edge_key(a, b));
        return it == hosted_on.end() ? -1 : it->second;
    }
    VertexSet chain(int anchor, int start) const {
        VertexSet r;
        for (int f = hosted(anchor, start); f >= 0; f = hosted(anchor, f)) r.push_back(f);
        return r;
    }
    VertexSet fan(int center, int near) const {
        VertexSet r;
        if (near < 0) return r;
        for (int f = hosted(near, center); f >= 0; f = hosted(center, f)) r.push_back(f);
        return r;
    }
};

KTreeSeq pad(const KTreeSeq& seq) {
    KTreeSeq p;
    p.k = 2;
    p.initial = {0, 1};
    p.steps = {{2, {0, 1}}, {3, {0, 2}}, {4, {2, 3}}, {5, {3, 4}}};
    for (const auto& st : seq.steps) p.steps.push_back({st.v + kOuterplanarPadding, {st.parents[0] + kOuterplanarPadding, st.parents[1] + kOuterplanarPadding}});
    return p;
}

}  // namespace

OuterplanarColoring color_outerplanar_detailed(const KTreeSeq& seq, const Graph& mask) {
    require(seq.k == 2, "NotOuterplanarWitness", "the witness must be a 2-tree");
    const KTree orig(seq);
    require(mask.n() == orig.n(), "InputNotSubgraph", "mask has the wrong vertex count");
    require(mask.is_subgraph_of(orig.graph()), "InputNotSubgraph", "mask uses a non-edge of the host");

    OuterplanarColoring out;
    out.host = KTree(pad(seq));
    const KTree& t = out.host;
    const int n = t.n();
    Host h{t, {}};
    for (int v = t.k(); v < n; ++v) {
        const auto& p = t.parents(v);
        const auto [it, fresh] = h.hosted_on.emplace(edge_key(p[0], p[1]), v);
        require(fresh, "NotOuterplanarWitness",
                "edge (" + std::to_string(p[0] - kOuterplanarPadding) + "," + std::to_string(p[1] - kOuterplanarPadding) +
                    ") hosts more than one vertex");
    }
    {
        std::vector<Edge> es;
        for (auto [a, b] : mask.edges()) es.emplace_back(a + kOuterplanarPadding, b + kOuterplanarPadding);
        out.mask = Graph(n, es);
    }
    out.layering = bfs_layering(t);
    const Layering& lay = out.layering;
    const auto layer_of = lay.layer_of(n);
    std::vector<int> psi(n, 0);
    psi[0] = 1;
    psi[1] = 2;

    auto paths = [&](int d) {
        // (x, y, root) for every layer-d path, hosted by an edge of layer d-1.
        std::vector<std::array<int, 3>> r;
        for (auto [x, y] : t.graph().edges())
            if (layer_of[x] == d - 1 && layer_of[y] == d - 1) {
                const int root = h.hosted(x, y);
                if (root >= 0) r.push_back({x, y, root});
            }
        return r;
    };

    for (auto [x, y, root] : paths(1)) {
        VertexSet a = h.chain(x, root), b = h.chain(y, root);
        VertexSet path(a.rbegin(), a.rend());
        path.push_back(root);
        path.insert(path.end(), b.begin(), b.end());
        for (std::size_t k = 0; k < path.size(); ++k) psi[path[k]] = 3 + static_cast<int>(k % 3);
    }

    auto extend = [&](int center, int pa, int pb, int near_a, int far_a, int near_b, int far_b) {
        const VertexSet fa = h.fan(center, near_a), fb = h.fan(center, near_b);
        ClaimGadget g;
        auto col = [&](int v) { return v < 0 ? 0 : psi[v]; };
        auto adj = [&](int v) { return v >= 0 && out.mask.has_edge(center, v); };
        g.x = col(pa);
        g.y = col(pb);
        g.v = col(center);
        g.u2 = col(near_a);
        g.u1 = col(far_a);
        g.w2 = col(near_b);
        g.w1 = col(far_b);
        g.fan_u = static_cast<int>(fa.size());
        g.fan_w = static_cast<int>(fb.size());
        g.vx = adj(pa);
        g.vy = adj(pb);
        g.vu2 = adj(near_a);
        g.vw2 = adj(near_b);
        for (int f : fa) g.vu.push_back(adj(f));
        for (int f : fb) g.vw.push_back(adj(f));
        const ClaimResult r = claim_extend(g);
        out.fallbacks += r.fallback;
        for (std::size_t k = 0; k < fa.size(); ++k) {
            require(psi[fa[k]] == 0, "Internal", "fan vertex colored twice");
            psi[fa[k]] = r.u[k];
        }
        for (std::size_t k = 0; k < fb.size(); ++k) {
            require(psi[fb[k]] == 0, "Internal", "fan vertex colored twice");
            psi[fb[k]] = r.w[k];
        }
    };
    auto at = [](const VertexSet& s, std::size_t k) { return k < s.size() ? s[k] : -1; };

    for (int d = 1; d < lay.count(); ++d)
        for (auto [x, y, root] : paths(d)) {
            const VertexSet a = h.chain(x, root), b = h.chain(y, root);
            extend(root, x, y, at(a, 0), at(a, 1), at(b, 0), at(b, 1));
            for (const auto& [side, z] : {std::pair{a, x}, std::pair{b, y}}) {
                int prev = root;
                for (std::size_t k = 0; k < side.size(); ++k) {
                    const int c = side[k];
                    const int s = h.hosted(prev, c);
                    extend(c, prev, z, s, s >= 0 ? h.hosted(prev, s) : -1, at(side, k + 1), at(side, k + 2));
                    prev = c;
                }
            }
        }
    for (int v = 0; v < n; ++v) require(psi[v] != 0, "Internal", "vertex " + std::to_string(v) + " left uncolored");

    out.host_coloring = Coloring(psi);
    VertexSet originals;
    for (int v = kOuterplanarPadding; v < n; ++v) originals.push_back(v);
    out.coloring = out.host_coloring.restricted(originals);
    return out;
}

Coloring color_outerplanar(const KTreeSeq& seq, const Graph& mask) { return color_outerplanar_detailed(seq, mask).coloring; }

Report check_outerplanar_properties(const OuterplanarColoring& r) {
    Report rep;
    const Graph& g = r.host.graph();
    const auto layer_of = r.layering.layer_of(g.n());
    Report p = is_proper(g, r.host_coloring);
    rep.merge(p, "O1.");
    rep.checked.push_back("O2");
    for (int v = 0; v < g.n(); ++v) {
        std::map<int, int> seen;
        for (int u : g.neighbors(v)) {
            if (layer_of[u] > layer_of[v]) continue;
            auto [it, fresh] = seen.emplace(r.host_coloring[u], u);
            if (!fresh) rep.add("O2", {v, it->second, u}, "two earlier neighbors share a color");
        }
    }
    rep.merge(is_strong_odd(r.mask, r.host_coloring), "O3.");
    return rep;
}

}  // namespace sodd
