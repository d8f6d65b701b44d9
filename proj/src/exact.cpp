#include "sodd/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>

namespace sodd {

namespace {

using Clock = std::chrono::steady_clock;

struct OutOfBudget {};

struct Shared {
    const SolverBudget& budget;
    Clock::time_point deadline;
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> stop{false};
};

class Engine {
public:
    Engine(const ColoringProblem& p, int t, Shared& sh, const std::vector<int>& order)
        : p_(p), t_(t), sh_(sh), order_(order), color_(p.n, -1), nbr_(p.n), in_par_(p.n), in_odd_(p.n) {
        for (auto [u, v] : p.distinct) {
            nbr_[u].push_back(v);
            nbr_[v].push_back(u);
        }
        const int np = static_cast<int>(p.parity_sets.size()), no = static_cast<int>(p.odd_sets.size());
        for (int s = 0; s < np; ++s)
            for (int v : p.parity_sets[s]) in_par_[v].push_back(s);
        for (int s = 0; s < no; ++s)
            for (int v : p.odd_sets[s]) in_odd_[v].push_back(s);
        pcnt_.assign(static_cast<std::size_t>(np) * t, 0);
        ocnt_.assign(static_cast<std::size_t>(no) * t, 0);
        pfree_.resize(np);
        pbad_.assign(np, 0);
        for (int s = 0; s < np; ++s) pfree_[s] = static_cast<int>(p.parity_sets[s].size());
        ofree_.resize(no);
        oodd_.assign(no, 0);
        for (int s = 0; s < no; ++s) ofree_[s] = static_cast<int>(p.odd_sets[s].size());
        ok_.assign(p.n + 2, 0);
        ok_[0] = 1;
        for (int c = 1; c <= p.n + 1; ++c) ok_[c] = p.rule.allows(c);
    }

    // Assigns and reports whether every touched set can still be completed.
    bool apply(int v, int c) {
        color_[v] = c;
        if (c > maxc_) {
            stack_max_.push_back(maxc_);
            maxc_ = c;
        } else {
            stack_max_.push_back(maxc_);
        }
        bool feasible = true;
        for (int s : in_par_[v]) {
            int& k = pcnt_[static_cast<std::size_t>(s) * t_ + c];
            pbad_[s] -= !ok_[k];
            ++k;
            pbad_[s] += !ok_[k];
            --pfree_[s];
            if (pbad_[s] > pfree_[s]) feasible = false;
        }
        for (int s : in_odd_[v]) {
            int& k = ocnt_[static_cast<std::size_t>(s) * t_ + c];
            ++k;
            oodd_[s] += k % 2 ? 1 : -1;
            --ofree_[s];
            if (ofree_[s] == 0 && oodd_[s] == 0) feasible = false;
        }
        return feasible;
    }

    void undo(int v) {
        const int c = color_[v];
        for (int s : in_par_[v]) {
            int& k = pcnt_[static_cast<std::size_t>(s) * t_ + c];
            pbad_[s] -= !ok_[k];
            --k;
            pbad_[s] += !ok_[k];
            ++pfree_[s];
        }
        for (int s : in_odd_[v]) {
            int& k = ocnt_[static_cast<std::size_t>(s) * t_ + c];
            oodd_[s] += k % 2 ? -1 : 1;
            --k;
            ++ofree_[s];
        }
        color_[v] = -1;
        maxc_ = stack_max_.back();
        stack_max_.pop_back();
    }

    int limit() const { return sh_.budget.symmetry_breaking ? std::min(t_, maxc_ + 2) : t_; }

    bool allowed(int v, int c) const {
        for (int u : nbr_[v])
            if (color_[u] == c) return false;
        return true;
    }

    bool dfs(int depth) {
        tick();
        if (depth == p_.n) return true;
        const int v = order_[depth];
        const int lim = limit();
        for (int c = 0; c < lim; ++c) {
            if (!allowed(v, c)) continue;
            const bool ok = apply(v, c);
            if (ok && dfs(depth + 1)) return true;
            undo(v);
        }
        return false;
    }

    // Consistent partial assignments of the first `depth` vertices.
    void prefixes(int at, int depth, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
        if (at == depth) {
            out.push_back(cur);
            return;
        }
        const int v = order_[at];
        const int lim = limit();
        for (int c = 0; c < lim; ++c) {
            if (!allowed(v, c)) continue;
            const bool ok = apply(v, c);
            if (ok) {
                cur.push_back(c);
                prefixes(at + 1, depth, cur, out);
                cur.pop_back();
            }
            undo(v);
        }
    }

    bool replay(const std::vector<int>& prefix) {
        bool ok = true;
        for (std::size_t i = 0; i < prefix.size(); ++i) ok = apply(order_[i], prefix[i]) && ok;
        return ok;
    }

    void reset(std::size_t depth) {
        for (std::size_t i = depth; i-- > 0;) undo(order_[i]);
    }

    const std::vector<int>& colors() const { return color_; }

private:
    void tick() {
        if ((++local_ & 1023) != 0) return;
        const auto total = sh_.nodes.fetch_add(1024) + 1024;
        if (sh_.stop.load(std::memory_order_relaxed)) throw OutOfBudget{};
        if (sh_.budget.node_limit > 0 && total > sh_.budget.node_limit) throw OutOfBudget{};
        if (sh_.budget.time_limit > 0 && Clock::now() > sh_.deadline) throw OutOfBudget{};
    }

public:
    std::int64_t local_ = 0;

private:
    const ColoringProblem& p_;
    int t_;
    Shared& sh_;
    const std::vector<int>& order_;
    std::vector<int> color_;
    std::vector<std::vector<int>> nbr_, in_par_, in_odd_;
    std::vector<int> pcnt_, ocnt_, pfree_, pbad_, ofree_, oodd_;
    std::vector<char> ok_;
    int maxc_ = -1;
    std::vector<int> stack_max_;
};

std::vector<int> branching_order(const ColoringProblem& p) {
    std::vector<int> order(p.n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p.degree[a] > p.degree[b]; });
    return order;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.n());
    for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
    return d;
}

std::vector<VertexSet> neighborhoods(const Graph& g) {
    std::vector<VertexSet> r;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 0) r.push_back(g.neighbors(v));
    return r;
}

bool rainbow_valid(const ColoringProblem& p) {
    if (!p.rule.allows(1) && !p.parity_sets.empty()) return false;
    return true;
}

Coloring rainbow(int n) {
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    return Coloring(c);
}

}  // namespace

ColoringProblem ColoringProblem::proper(const Graph& g) {
    ColoringProblem p;
    p.n = g.n();
    p.distinct = g.edges();
    p.degree = degrees(g);
    return p;
}

ColoringProblem ColoringProblem::strong_odd(const Graph& g, const MultiplicityRule& rule) {
    rule.validate();
    ColoringProblem p = proper(g);
    p.parity_sets = neighborhoods(g);
    p.rule = rule;
    return p;
}

ColoringProblem ColoringProblem::improper_strong_odd(const Graph& g, const MultiplicityRule& rule) {
    ColoringProblem p = strong_odd(g, rule);
    p.distinct.clear();
    return p;
}

ColoringProblem ColoringProblem::odd(const Graph& g) {
    ColoringProblem p = proper(g);
    p.odd_sets = neighborhoods(g);
    return p;
}

ColoringProblem ColoringProblem::constrained(const Graph& g, const ConstraintSet& cs) {
    ColoringProblem p = proper(g);
    for (const auto& d : cs.digraphs) {
        require(d.n() == g.n() && d.is_subgraph_of(g), "InputNotSubgraph", "digraph constraint is not a subgraph");
        for (int v = 0; v < d.n(); ++v)
            if (!d.out(v).empty()) p.parity_sets.push_back(d.out(v));
    }
    for (const auto& m : cs.sets) {
        for (int v : m) require(v >= 0 && v < g.n(), "InputNotSubgraph", "set constraint member out of range");
        VertexSet s = m;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty()) p.parity_sets.push_back(s);
    }
    return p;
}

std::optional<Coloring> decide(const ColoringProblem& p, int t, const SolverBudget& budget, std::int64_t* nodes) {
    require(t >= 0, "InvalidArgument", "negative color count");
    if (p.n == 0) return Coloring();
    if (t == 0) return std::nullopt;
    Shared sh{budget, Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(budget.time_limit))};
    const auto order = branching_order(p);
    const int threads = std::max(1, budget.threads);

    std::vector<std::vector<int>> prefixes;
    int depth = 0;
    if (threads == 1) {
        prefixes.push_back({});
    } else {
        for (depth = 1; depth <= p.n; ++depth) {
            Engine e(p, t, sh, order);
            std::vector<int> cur;
            prefixes.clear();
            e.prefixes(0, depth, cur, prefixes);
            if (static_cast<int>(prefixes.size()) >= 8 * threads || prefixes.empty()) break;
        }
        depth = std::min(depth, p.n);
    }

    std::atomic<std::size_t> next{0}, best{prefixes.size()};
    std::mutex mu;
    std::vector<int> found;
    bool exceeded = false;
    auto work = [&]() {
        Engine e(p, t, sh, order);
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= prefixes.size() || i > best.load()) break;
                const bool ok = e.replay(prefixes[i]);
                if (ok && e.dfs(depth)) {
                    std::lock_guard<std::mutex> lock(mu);
                    if (i < best.load()) {
                        best = i;
                        found = e.colors();
                    }
                    break;
                }
                e.reset(prefixes[i].size());
            }
        } catch (const OutOfBudget&) {
            std::lock_guard<std::mutex> lock(mu);
            exceeded = true;
            sh.stop = true;
        }
        sh.nodes.fetch_add(e.local_ & 1023);
    };
    if (threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (nodes) *nodes += sh.nodes.load();
    if (exceeded && best.load() == prefixes.size())
        throw BudgetExceeded(t, p.n, rainbow_valid(p) ? rainbow(p.n) : Coloring(), sh.nodes.load());
    if (best.load() == prefixes.size()) return std::nullopt;
    return Coloring(found);
}

SolveResult solve_min(const ColoringProblem& p, const SolverBudget& budget) {
    const auto start = Clock::now();
    SolveResult r;
    if (p.n == 0) return r;
    const int maxc = budget.max_colors > 0 ? std::min(budget.max_colors, p.n) : p.n;
    int t = p.distinct.empty() ? 1 : 2;
    r.proven_infeasible = t - 1;
    SolverBudget b = budget;
    for (; t <= maxc; ++t) {
        if (budget.time_limit > 0) {
            const double left = budget.time_limit - std::chrono::duration<double>(Clock::now() - start).count();
            if (left <= 0) throw BudgetExceeded(t, p.n, rainbow_valid(p) ? rainbow(p.n) : Coloring(), r.nodes);
            b.time_limit = left;
        }
        if (budget.node_limit > 0) {
            b.node_limit = budget.node_limit - r.nodes;
            if (b.node_limit <= 0) throw BudgetExceeded(t, p.n, rainbow_valid(p) ? rainbow(p.n) : Coloring(), r.nodes);
        }
        auto c = decide(p, t, b, &r.nodes);
        if (c) {
            r.value = t;
            r.witness = *c;
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            return r;
        }
        r.proven_infeasible = t;
    }
    if (maxc < p.n) throw BudgetExceeded(maxc + 1, p.n, rainbow_valid(p) ? rainbow(p.n) : Coloring(), r.nodes);
    throw Error("Infeasible", "no coloring satisfies the constraints");
}

SolveResult chi_so_exact(const Graph& g, const SolverBudget& budget, const MultiplicityRule& rule) {
    return solve_min(ColoringProblem::strong_odd(g, rule), budget);
}

SolveResult chi_iso_exact(const Graph& g, const SolverBudget& budget, const MultiplicityRule& rule) {
    return solve_min(ColoringProblem::improper_strong_odd(g, rule), budget);
}

SolveResult chi_odd_exact(const Graph& g, const SolverBudget& budget) { return solve_min(ColoringProblem::odd(g), budget); }

SolveResult chi_exact(const Graph& g, const SolverBudget& budget) { return solve_min(ColoringProblem::proper(g), budget); }

SolveResult chi_so_constrained(const Graph& g, const ConstraintSet& cs, const SolverBudget& budget) {
    return solve_min(ColoringProblem::constrained(g, cs), budget);
}

bool enumerate_oracle(const Graph& g, int t, const MultiplicityRule& rule, bool proper_required) {
    rule.validate();
    const int n = g.n();
    if (n == 0) return true;
    if (t <= 0) return false;
    // Number of restricted growth strings with at most t blocks.
    constexpr double kCap = 1e8;
    std::vector<std::vector<double>> s(n + 1, std::vector<double>(t + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= t; ++k) s[i][k] = std::min(kCap * 10, k * s[i - 1][k] + s[i - 1][k - 1]);
    double total = 0;
    for (int k = 1; k <= t; ++k) total += s[n][k];
    require(total <= kCap, "TooLarge", "more than 10^8 colorings to enumerate");

    std::vector<int> c(n, 0);
    std::vector<int> count(t);
    auto valid = [&]() {
        if (proper_required)
            for (auto [u, v] : g.edges())
                if (c[u] == c[v]) return false;
        for (int v = 0; v < n; ++v) {
            std::fill(count.begin(), count.end(), 0);
            for (int u : g.neighbors(v)) ++count[c[u]];
            for (int k : count)
                if (!rule.allows(k)) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int i, int used) -> bool {
        if (i == n) return valid();
        for (int k = 0; k <= std::min(used, t - 1); ++k) {
            c[i] = k;
            if (self(self, i + 1, std::max(used, k + 1))) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace sodd
