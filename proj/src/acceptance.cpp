#include "sodd/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "sodd/bounds.hpp"
#include "sodd/constructive.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/outerplanar.hpp"
#include "sodd/verifier.hpp"

namespace sodd {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
    int cases = 0, failures = 0;
    std::string first;
    void fail(const std::string& what) {
        if (failures++ == 0) first = what;
    }
    void pass_if(bool ok, const std::string& what) {
        ++cases;
        if (!ok) fail(what);
    }
    std::string str() const {
        return std::to_string(cases) + " cases, " + std::to_string(failures) + " failures" +
               (first.empty() ? "" : " (first: " + first + ")");
    }
};

CriterionResult gadget_exactness(const AcceptanceOptions& opt) {
    CriterionResult r;
    r.pass = true;
    std::ostringstream d;
    for (int k : {1, 2}) {
        const auto t0 = Clock::now();
        const Graph g = gen_gk(k);
        const auto s = chi_so_exact(g);
        const double secs = since(t0);
        const bool ok = s.value == (1 << k) + 1 && is_strong_odd(g, s.witness).pass() &&
                        s.witness.num_colors() == s.value && s.proven_infeasible == s.value - 1 && secs < 60;
        r.pass &= ok;
        d << "G" << k << "=" << s.value << " ";
        r.data["G" + std::to_string(k)] = {{"value", s.value}, {"infeasible_at", s.proven_infeasible},
                                           {"nodes", s.nodes}, {"seconds", secs}};
    }
    SolverBudget b;
    b.time_limit = opt.gk3_budget_seconds;
    b.threads = opt.threads;
    try {
        const auto s = chi_so_exact(gen_gk(3), b);
        d << "G3=" << s.value << " (reported)";
        r.data["G3"] = {{"value", s.value}, {"infeasible_at", s.proven_infeasible}, {"nodes", s.nodes},
                        {"seconds", s.seconds}, {"verified", is_strong_odd(gen_gk(3), s.witness).pass()}};
    } catch (const BudgetExceeded& e) {
        d << "G3 in [" << e.lower << "," << e.upper << "] (budget)";
        r.data["G3"] = {{"lower", e.lower}, {"upper", e.upper}};
    }
    r.detail = d.str();
    return r;
}

CriterionResult improper_gadgets(const AcceptanceOptions&) {
    CriterionResult r;
    r.pass = true;
    std::ostringstream d;
    const auto t0 = Clock::now();
    for (int n : {3, 5, 7}) {
        const auto s = chi_iso_exact(complete_graph(n));
        r.pass &= s.value == n && is_improper_strong_odd(complete_graph(n), s.witness).pass();
        d << "iso(K" << n << ")=" << s.value << " ";
        r.data["K" + std::to_string(n)] = s.value;
    }
    const double kn = since(t0);
    r.pass &= kn < 10;
    for (int n : {3, 4}) {
        const Graph g = gen_iso_gadget(n);
        bool odd = true;
        for (int v = 0; v < g.n(); ++v) odd &= g.degree(v) % 2 == 1;
        const bool one = is_improper_strong_odd(g, Coloring::uniform(g.n())).pass();
        const int chi = chi_exact(g).value;
        const int so = chi_so_exact(g).value;
        r.pass &= odd && one && chi == 3 && so >= n;
        d << "gadget" << n << ": odd degrees=" << odd << " chi=" << chi << " so=" << so << " ";
        r.data["gadget" + std::to_string(n)] = {{"all_degrees_odd", odd}, {"iso_one", one}, {"chi", chi}, {"so", so}};
    }
    r.data["kn_seconds"] = kn;
    r.detail = d.str();
    return r;
}

CriterionResult outerplanar(const AcceptanceOptions&) {
    CriterionResult r;
    Tally t;
    int max_colors = 0, fallbacks = 0, max_n = 0;
    const auto t0 = Clock::now();
    for (int s = 0; s < 100; ++s) {
        Rng rng(7000 + s);
        const int n = rng.between(3, 200);
        const KTreeSeq seq = gen_random_maximal_outerplanar(n, rng.next());
        const Graph host = build_ktree(seq);
        const Graph mask = random_subgraph(host, rng.chance(0.3) ? 1.0 : 0.3 + 0.6 * rng.below(100) / 100.0, rng);
        const auto res = color_outerplanar_detailed(seq, mask);
        max_colors = std::max(max_colors, res.coloring.num_colors());
        max_n = std::max(max_n, n);
        fallbacks += res.fallbacks;
        const bool ok = res.coloring.num_colors() <= 8 && is_strong_odd(mask, res.coloring).pass() &&
                        is_proper(host, res.coloring).pass() && check_outerplanar_properties(res).pass();
        t.pass_if(ok, "seed " + std::to_string(s));
    }
    const double secs = since(t0);
    r.pass = t.failures == 0 && secs < 300;
    r.detail = t.str() + ", max colors " + std::to_string(max_colors) + ", search fallbacks " + std::to_string(fallbacks);
    r.data = {{"cases", t.cases}, {"failures", t.failures}, {"max_colors", max_colors}, {"max_n", max_n},
              {"fallbacks", fallbacks}, {"seconds", secs}};
    return r;
}

CriterionResult claim_exhaustive(const AcceptanceOptions&) {
    CriterionResult r;
    Tally t;
    long long fallbacks = 0;
    ClaimGadget g;
    auto check = [&](const std::string& tag) {
        const ClaimResult res = claim_extend(g);
        fallbacks += res.fallback;
        const auto failed = claim_postconditions(g, res);
        t.pass_if(failed.empty(), failed.empty() ? tag : tag + " " + failed[0]);
    };
    // Side options: 0 = no path neighbor, 1 = no second path vertex, else its color.
    for (int uo : {0, 1, 3, 4, 6, 7, 8})
        for (int wo : {0, 1, 2, -1, 6, 7, 8})
            for (int lu = 0; lu <= (uo == 0 ? 0 : 6); ++lu)
                for (int lw = 0; lw <= (wo == 0 ? 0 : 6); ++lw) {
                    g = ClaimGadget{};
                    g.x = 2;
                    g.y = 3;
                    g.v = 5;
                    g.u2 = uo ? 1 : 0;
                    g.u1 = uo > 1 ? uo : 0;
                    g.w2 = wo ? 4 : 0;
                    g.w1 = wo == -1 ? 1 : (wo > 1 ? wo : 0);
                    g.fan_u = lu;
                    g.fan_w = lw;
                    const int bits = 4 + lu + lw;
                    for (long long mk = 0; mk < (1LL << bits); ++mk) {
                        g.vx = mk & 1;
                        g.vy = mk & 2;
                        g.vu2 = mk & 4;
                        g.vw2 = mk & 8;
                        g.vu.assign(lu, false);
                        g.vw.assign(lw, false);
                        for (int k = 0; k < lu; ++k) g.vu[k] = mk >> (4 + k) & 1;
                        for (int k = 0; k < lw; ++k) g.vw[k] = mk >> (4 + lu + k) & 1;
                        check("u" + std::to_string(uo) + " w" + std::to_string(wo) + " mask " + std::to_string(mk));
                    }
                }
    const int canonical = t.cases;
    // The same gadgets under random renamings of the eight colors.
    Rng rng(31);
    for (int s = 0; s < 100000; ++s) {
        std::vector<int> perm(9);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> tail(perm.begin() + 1, perm.end());
        rng.shuffle(tail);
        std::copy(tail.begin(), tail.end(), perm.begin() + 1);
        g = ClaimGadget{};
        const int uo = std::vector<int>{0, 1, 3, 4, 6, 7, 8}[rng.below(7)];
        const int wo = std::vector<int>{0, -1, 1, 2, 6, 7, 8}[rng.below(7)];
        g.x = perm[2];
        g.y = perm[3];
        g.v = perm[5];
        g.u2 = uo ? perm[1] : 0;
        g.u1 = uo > 1 ? perm[uo] : 0;
        g.w2 = wo ? perm[4] : 0;
        g.w1 = wo == -1 ? perm[1] : (wo > 1 ? perm[wo] : 0);
        g.fan_u = uo ? rng.between(0, 6) : 0;
        g.fan_w = wo ? rng.between(0, 6) : 0;
        g.vx = rng.chance(0.5);
        g.vy = rng.chance(0.5);
        g.vu2 = rng.chance(0.5);
        g.vw2 = rng.chance(0.5);
        for (int k = 0; k < g.fan_u; ++k) g.vu.push_back(rng.chance(0.5));
        for (int k = 0; k < g.fan_w; ++k) g.vw.push_back(rng.chance(0.5));
        check("renamed sample " + std::to_string(s));
    }
    r.pass = t.failures == 0;
    r.detail = t.str() + " (" + std::to_string(canonical) + " canonical), search fallbacks " + std::to_string(fallbacks);
    r.data = {{"cases", t.cases}, {"canonical_cases", canonical}, {"failures", t.failures}, {"fallbacks", fallbacks}};
    return r;
}

CriterionResult treewidth(const AcceptanceOptions&) {
    CriterionResult r;
    Tally t;
    int max_colors = 0;
    for (int s = 0; s < 200; ++s) {
        Rng rng(11000 + s);
        const int k = 1 + s % 2;
        const auto pk = gen_random_partial_ktree(k, rng.between(0, 60 - k), 0.3 + 0.7 * rng.below(101) / 100.0, rng.next());
        const KTree tree(pk.seq);
        const int l = rng.between(1, 2), m = rng.between(1, 2);
        std::vector<DiGraph> ds;
        std::vector<VertexSet> ms;
        for (int i = 0; i < l; ++i) ds.push_back(random_digraph(pk.mask, rng.below(101) / 100.0, rng));
        for (int j = 0; j < m; ++j) ms.push_back(random_set(tree.n(), rng.below(101) / 100.0, rng));
        const Coloring c = color_tw(tree, ds, ms);
        const auto rep = check_constrained(pk.mask, ds, ms, c);
        const bool bound = bounds().f1(k, l, m).at_least(c.num_colors());
        max_colors = std::max(max_colors, c.num_colors());
        t.pass_if(rep.pass() && bound && is_proper(tree.graph(), c).pass(),
                  "seed " + std::to_string(s) + ": " + (bound ? rep.summary() : "bound exceeded"));
    }
    r.pass = t.failures == 0;
    r.detail = t.str() + ", max colors " + std::to_string(max_colors);
    r.data = {{"cases", t.cases}, {"failures", t.failures}, {"max_colors", max_colors}};
    return r;
}

CriterionResult clique_colorings(const AcceptanceOptions&) {
    CriterionResult r;
    Tally tw, sum;
    for (int s = 0; s < 200; ++s) {
        Rng rng(13000 + s);
        const int k = 1 + s % 3;
        const auto pk = gen_random_partial_ktree(k, rng.between(0, 50), 1.0, rng.next());
        const KTree tree(pk.seq);
        std::vector<VertexSet> qs;
        const double p = rng.below(101) / 100.0;
        for (int v = k; v < tree.n(); ++v)
            if (rng.chance(p)) qs.push_back(tree.represented_clique(v));
        const auto c = clique_coloring(tree, qs);
        const auto rep = check_clique_coloring(tree.n(), qs, c);
        const int used = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
        tw.pass_if(rep.pass() && bounds().g1(k).at_least(used), "tree seed " + std::to_string(s) + ": " + rep.summary());
    }
    for (int s = 0; s < 200; ++s) {
        Rng rng(17000 + s);
        SumParams p;
        p.w = rng.between(0, 2);
        p.k = rng.between(0, 1);
        p.t = rng.between(0, 1);
        p.summands = rng.between(1, 6);
        const SumDesc desc = gen_random_sum(p, rng.next());
        const BuiltSum built = build_sum(desc);
        const auto qs = random_sum_cliques(desc, built, rng.between(1, 4), rng);
        const auto c = sum_clique_coloring(desc, qs);
        const auto rep = check_clique_coloring(built.graph.n(), qs, c);
        const int used = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
        sum.pass_if(rep.pass() && bounds().g4(desc.k, desc.t, desc.w).at_least(used),
                    "sum seed " + std::to_string(s) + ": " + rep.summary());
    }
    r.pass = tw.failures == 0 && sum.failures == 0;
    r.detail = "k-trees: " + tw.str() + "; sums: " + sum.str();
    r.data = {{"ktree", {{"cases", tw.cases}, {"failures", tw.failures}}},
              {"sum", {{"cases", sum.cases}, {"failures", sum.failures}}}};
    return r;
}

CriterionResult products_and_sums(const AcceptanceOptions&) {
    CriterionResult r;
    Tally rtw, summand, sum;
    for (int s = 0; s < 100; ++s) {
        Rng rng(19000 + s);
        const int k = s % 2, P = rng.between(1, 6);
        const KTree h(gen_random_partial_ktree(k, rng.between(0, 9), 1.0, rng.next()).seq);
        const Graph g = random_subgraph(strong_product(h.graph(), P), 0.5 + rng.below(51) / 100.0, rng);
        const DiGraph d = random_digraph(g, rng.below(101) / 100.0, rng);
        std::vector<VertexSet> ms;
        for (int j = rng.between(1, 2); j > 0; --j) ms.push_back(random_set(g.n(), rng.below(101) / 100.0, rng));
        const Coloring c = color_rtw(h, P, d, ms);
        const auto rep = check_constrained(g, {d}, ms, c);
        rtw.pass_if(rep.pass() && bounds().f2(k, static_cast<int>(ms.size())).at_least(c.num_colors()),
                    "rtw seed " + std::to_string(s) + ": " + rep.summary());
    }
    for (int s = 0; s < 100; ++s) {
        Rng rng(23000 + s);
        const int k = s % 2, t = rng.between(0, 2), P = rng.between(1, 4);
        const KTree h(gen_random_partial_ktree(k, rng.between(0, 8), 1.0, rng.next()).seq);
        const Graph g = random_subgraph(join_with_clique(strong_product(h.graph(), P), t), 0.5 + rng.below(51) / 100.0, rng);
        const DiGraph d = random_digraph(g, rng.below(101) / 100.0, rng);
        std::vector<VertexSet> ms;
        for (int j = rng.between(1, 2); j > 0; --j) ms.push_back(random_set(g.n(), rng.below(101) / 100.0, rng));
        const Coloring c = color_summand(h, P, t, d, ms);
        const auto rep = check_constrained(g, {d}, ms, c);
        summand.pass_if(rep.pass() && bounds().f3(k, t, static_cast<int>(ms.size())).at_least(c.num_colors()),
                        "summand seed " + std::to_string(s) + ": " + rep.summary());
    }
    for (int s = 0; s < 100; ++s) {
        Rng rng(29000 + s);
        SumParams p;
        p.w = s % 3;
        p.k = rng.between(0, 1);
        p.t = rng.between(0, 1);
        p.summands = rng.between(1, 8);
        p.max_vertices = 60;
        const SumDesc desc = gen_random_sum(p, rng.next());
        const BuiltSum built = build_sum(desc);
        const Graph g = random_subgraph(built.graph, 0.5 + rng.below(51) / 100.0, rng);
        const DiGraph d = random_digraph(g, rng.below(101) / 100.0, rng);
        std::vector<VertexSet> ms;
        for (int j = rng.between(1, 2); j > 0; --j) ms.push_back(random_set(g.n(), rng.below(101) / 100.0, rng));
        const Coloring c = color_sum(desc, d, ms);
        const auto rep = check_constrained(g, {d}, ms, c);
        sum.pass_if(rep.pass() && g.n() <= 60 &&
                        bounds().f4(desc.k, desc.t, static_cast<int>(ms.size()), desc.w).at_least(c.num_colors()),
                    "sum seed " + std::to_string(s) + ": " + rep.summary());
    }
    r.pass = rtw.failures == 0 && summand.failures == 0 && sum.failures == 0;
    r.detail = "rtw: " + rtw.str() + "; summand: " + summand.str() + "; sum: " + sum.str();
    r.data = {{"rtw", {{"cases", rtw.cases}, {"failures", rtw.failures}}},
              {"summand", {{"cases", summand.cases}, {"failures", summand.failures}}},
              {"sum", {{"cases", sum.cases}, {"failures", sum.failures}}}};
    return r;
}

// Connected graphs on n vertices up to isomorphism, by minimal adjacency mask.
std::vector<Graph> connected_graphs(int n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<int> index(n * n, 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
        index[slots[i].first * n + slots[i].second] = static_cast<int>(i);
        index[slots[i].second * n + slots[i].first] = static_cast<int>(i);
    }
    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
        std::uint32_t best = mask;
        for (const auto& q : perms) {
            std::uint32_t m2 = 0;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) m2 |= 1u << index[q[slots[i].first] * n + q[slots[i].second]];
            best = std::min(best, m2);
        }
        if (!seen.insert(best).second) continue;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (best >> i & 1) es.push_back(slots[i]);
        Graph g(n, es);
        const auto dist = bfs_distances(g, 0);
        if (std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; })) out.push_back(g);
    }
    return out;
}

CriterionResult oracle_equivalence(const AcceptanceOptions&) {
    CriterionResult r;
    Tally t;
    std::vector<Graph> corpus;
    int connected = 0;
    for (int n = 1; n <= 6; ++n)
        for (auto& g : connected_graphs(n)) {
            corpus.push_back(std::move(g));
            ++connected;
        }
    for (int s = 0; s < 200; ++s) {
        Rng rng(31000 + s);
        const int n = rng.between(1, 8);
        const double p = rng.below(101) / 100.0;
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance(p)) b.add_edge(u, v);
        corpus.push_back(b.build());
    }
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        const auto so = chi_so_exact(g);
        const int chi = chi_exact(g).value, odd = chi_odd_exact(g).value;
        const MultiplicityRule rule;
        const bool at_v = enumerate_oracle(g, so.value, rule, true);
        const bool below = so.value > 0 && enumerate_oracle(g, so.value - 1, rule, true);
        t.pass_if(at_v && !below && chi <= odd && odd <= so.value && is_strong_odd(g, so.witness).pass(),
                  "graph " + std::to_string(i) + " (n=" + std::to_string(g.n()) + ")");
    }
    r.pass = t.failures == 0;
    r.detail = t.str() + " (" + std::to_string(connected) + " connected graphs up to isomorphism)";
    r.data = {{"cases", t.cases}, {"connected_graphs", connected}, {"failures", t.failures}};
    return r;
}

CriterionResult facially_odd(const AcceptanceOptions&) {
    CriterionResult r;
    Tally t;
    int max_value = 0;
    for (int s = 0; s < 50; ++s) {
        Rng rng(37000 + s);
        const int n = rng.between(3, 8);
        const PlaneGraph p = gen_random_triangulation(n, rng.between(0, 3 * n), rng.next());
        const FaceAugmentation aug = plane_to_strong_odd(p);
        const auto so = chi_so_exact(aug.graph);
        max_value = std::max(max_value, so.value);
        VertexSet orig(p.graph.n());
        std::iota(orig.begin(), orig.end(), 0);
        const Coloring c = so.witness.restricted(orig);
        t.pass_if(is_strong_odd(aug.graph, so.witness).pass() && is_facially_odd(p, c).pass(),
                  "seed " + std::to_string(s));
    }
    r.pass = t.failures == 0;
    r.detail = t.str() + ", max colors on the augmented graph " + std::to_string(max_value);
    r.data = {{"cases", t.cases}, {"failures", t.failures}, {"max_augmented_chi_so", max_value}};
    return r;
}

CriterionResult odd_sanity(const AcceptanceOptions&) {
    CriterionResult r;
    r.pass = true;
    std::ostringstream d;
    for (int k = 1; k <= 3; ++k) {
        const Graph g = gen_gk(k);
        const auto o = chi_odd_exact(g);
        const bool ok = o.value <= 4 && is_odd_coloring(g, o.witness).pass();
        r.pass &= ok;
        d << "odd(G" << k << ")=" << o.value << " ";
        r.data["G" + std::to_string(k)] = o.value;
    }
    r.detail = d.str();
    return r;
}

}  // namespace

const std::vector<Criterion>& acceptance_criteria() {
    static const std::vector<Criterion> all{
        {"gadget_exactness", "chi_so(G1)=3 and chi_so(G2)=5 with witnesses and infeasibility one below", gadget_exactness},
        {"improper_gadgets", "chi_iso(K_n)=n for n=3,5,7; iso gadgets n=3,4", improper_gadgets},
        {"outerplanar_8", "outerplanar colorings use at most 8 colors and are strong odd on the mask", outerplanar},
        {"claim_exhaustive", "extension gadget postconditions over the full enumeration", claim_exhaustive},
        {"treewidth", "constrained colorings of partial k-trees within f1", treewidth},
        {"clique_colorings", "clique colorings of k-trees within g1 and of sums within g4", clique_colorings},
        {"rtw_and_sums", "row treewidth, summand and sum colorings within f2, f3, f4", products_and_sums},
        {"oracle_equivalence", "exact solver agrees with enumeration; chi <= chi_o <= chi_so", oracle_equivalence},
        {"facially_odd", "strong odd colorings of face augmentations restrict to facially odd colorings", facially_odd},
        {"odd_sanity", "chi_o(G_k) <= 4 for k <= 3", odd_sanity},
    };
    return all;
}

CriterionResult run_criterion(const Criterion& c, const AcceptanceOptions& opt) {
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
        r = c.run(opt);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.id = c.id;
    r.title = c.title;
    r.seconds = since(t0);
    return r;
}

}  // namespace sodd
