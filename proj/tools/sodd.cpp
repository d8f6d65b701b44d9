#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "sodd/acceptance.hpp"
#include "sodd/constructive.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/io.hpp"
#include "sodd/outerplanar.hpp"
#include "sodd/verifier.hpp"

using namespace sodd;

namespace {

struct Failure {
    std::string what;
};

std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> r;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("InputError", "parameter '" + item + "' is not key=value");
        r[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return r;
}

double param(const std::map<std::string, std::string>& p, const std::string& key, double fallback) {
    auto it = p.find(key);
    if (it == p.end()) return fallback;
    try {
        return std::stod(it->second);
    } catch (const std::exception&) {
        throw Error("InputError", "parameter " + key + " is not a number");
    }
}

Json read_input(const std::string& file) {
    if (file.empty() || file == "-") return read_document(std::cin);
    std::ifstream in(file);
    if (!in) throw Error("InputError", "cannot open " + file);
    return read_document(in);
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

const Json& need(const Json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) throw Error("InputError", std::string("missing \"") + key + "\"");
    return doc.at(key);
}

Coloring coloring_of(const Json& doc, int n) {
    for (const char* key : {"coloring", "witness"})
        if (doc.contains(key)) return coloring_from_json(doc.at(key), n);
    if (doc.contains("colors")) return coloring_from_json(doc, n);
    throw Error("InputError", "missing \"coloring\"");
}

std::vector<DiGraph> digraphs_of(const Json& doc, const Graph& g) {
    std::vector<DiGraph> r;
    if (doc.contains("digraphs"))
        for (const auto& d : doc.at("digraphs")) r.push_back(digraph_from_json(d));
    if (r.empty()) r.push_back(DiGraph::symmetric(g));
    return r;
}

std::vector<VertexSet> sets_of(const Json& doc) {
    std::vector<VertexSet> r;
    if (doc.contains("sets"))
        for (const auto& s : doc.at("sets")) r.push_back(s.get<VertexSet>());
    return r;
}

int cmd_gen(const std::string& gadget, const std::string& params, std::uint64_t seed) {
    const auto p = parse_params(params);
    Json out;
    if (gadget == "gk") {
        out["graph"] = to_json(gen_gk(static_cast<int>(param(p, "k", 2)), param(p, "tree_edges", 0) != 0));
    } else if (gadget == "iso") {
        out["graph"] = to_json(gen_iso_gadget(static_cast<int>(param(p, "n", 3))));
    } else if (gadget == "ktree") {
        const auto pk = gen_random_partial_ktree(static_cast<int>(param(p, "k", 2)), static_cast<int>(param(p, "n", 20)),
                                                 param(p, "keep", 1.0), seed);
        out["graph"] = to_json(pk.mask);
        out["ktree"] = to_json(pk.seq);
    } else if (gadget == "outerplanar") {
        const auto seq = gen_random_maximal_outerplanar(static_cast<int>(param(p, "n", 20)), seed);
        Rng rng(seed ^ 0x5eedULL);
        out["graph"] = to_json(random_subgraph(build_ktree(seq), param(p, "keep", 1.0), rng));
        out["ktree"] = to_json(seq);
    } else if (gadget == "triangulation") {
        const int n = static_cast<int>(param(p, "n", 8));
        const auto pl = gen_random_triangulation(n, static_cast<int>(param(p, "flips", n)), seed);
        out["graph"] = to_json(pl.graph);
        out["faces"] = pl.faces;
    } else if (gadget == "sum") {
        SumParams sp;
        sp.w = static_cast<int>(param(p, "w", sp.w));
        sp.k = static_cast<int>(param(p, "k", sp.k));
        sp.t = static_cast<int>(param(p, "t", sp.t));
        sp.summands = static_cast<int>(param(p, "summands", sp.summands));
        sp.max_vertices = static_cast<int>(param(p, "max_vertices", sp.max_vertices));
        const SumDesc desc = gen_random_sum(sp, seed);
        out["graph"] = to_json(build_sum(desc).graph);
        out["sum"] = to_json(desc);
    } else {
        throw Error("InputError", "unknown gadget " + gadget);
    }
    emit(out);
    return 0;
}

int cmd_color(const std::string& algo, const Json& doc) {
    Json out = doc;
    Coloring c;
    if (algo == "outerplanar") {
        const KTreeSeq seq = ktree_from_json(need(doc, "ktree"));
        const Graph mask = doc.contains("graph") ? graph_from_json(doc.at("graph")) : build_ktree(seq);
        c = color_outerplanar(seq, mask);
    } else if (algo == "tw") {
        const KTree t(ktree_from_json(need(doc, "ktree")));
        const Graph g = doc.contains("graph") ? graph_from_json(doc.at("graph")) : t.graph();
        c = color_tw(t, digraphs_of(doc, g), sets_of(doc));
    } else if (algo == "rtw" || algo == "summand") {
        const KTree h(ktree_from_json(need(doc, "ktree")));
        const int len = need(doc, "path_len").get<int>();
        const int t = algo == "summand" ? need(doc, "t").get<int>() : 0;
        const Graph host = algo == "rtw" ? strong_product(h.graph(), len) : summand_graph(h, len, t);
        const Graph g = doc.contains("graph") ? graph_from_json(doc.at("graph")) : host;
        const auto ds = digraphs_of(doc, g);
        if (ds.size() != 1) throw Error("InputError", "expected exactly one digraph");
        c = algo == "rtw" ? color_rtw(h, len, ds[0], sets_of(doc)) : color_summand(h, len, t, ds[0], sets_of(doc));
        if (!doc.contains("graph")) out["graph"] = to_json(host);
    } else if (algo == "sum") {
        const SumDesc desc = sum_from_json(need(doc, "sum"));
        const Graph g = doc.contains("graph") ? graph_from_json(doc.at("graph")) : build_sum(desc).graph;
        const auto ds = digraphs_of(doc, g);
        if (ds.size() != 1) throw Error("InputError", "expected exactly one digraph");
        c = color_sum(desc, ds[0], sets_of(doc));
    } else {
        throw Error("InputError", "unknown algorithm " + algo);
    }
    out["coloring"] = to_json(c);
    emit(out);
    return 0;
}

int cmd_solve(const std::string& notion, const Json& doc, const SolverBudget& b) {
    const Graph g = graph_from_json(need(doc, "graph"));
    SolveResult r;
    try {
        if (notion == "so") r = chi_so_exact(g, b);
        else if (notion == "iso") r = chi_iso_exact(g, b);
        else if (notion == "odd") r = chi_odd_exact(g, b);
        else if (notion == "proper") r = chi_exact(g, b);
        else throw Error("InputError", "unknown notion " + notion);
    } catch (const BudgetExceeded& e) {
        emit({{"lower", e.lower}, {"upper", e.upper}, {"best", to_json(e.best)}, {"nodes", e.nodes}, {"graph", to_json(g)}});
        throw Failure{"budget exhausted"};
    }
    emit({{"value", r.value}, {"witness", to_json(r.witness)}, {"proven_infeasible", r.proven_infeasible},
          {"nodes", r.nodes}, {"time", r.seconds}, {"graph", to_json(g)}});
    return 0;
}

int cmd_verify(const std::string& notion, const Json& doc) {
    Report rep;
    if (notion == "facial") {
        PlaneGraph p;
        p.graph = graph_from_json(need(doc, "graph"));
        p.faces = need(doc, "faces").get<std::vector<std::vector<int>>>();
        p.validate();
        rep = is_facially_odd(p, coloring_of(doc, p.graph.n()));
    } else if (notion == "hypergraph") {
        const Hypergraph h = hypergraph_from_json(need(doc, "hypergraph"));
        rep = is_hypergraph_strong_odd(h, coloring_of(doc, h.n));
    } else {
        const Graph g = graph_from_json(need(doc, "graph"));
        const Coloring c = coloring_of(doc, g.n());
        if (notion == "so") rep = is_strong_odd(g, c);
        else if (notion == "iso") rep = is_improper_strong_odd(g, c);
        else if (notion == "odd") rep = is_odd_coloring(g, c);
        else if (notion == "proper") rep = is_proper(g, c);
        else if (notion == "constrained") rep = check_constrained(g, digraphs_of(doc, g), sets_of(doc), c);
        else throw Error("InputError", "unknown notion " + notion);
    }
    emit(to_json(rep));
    return rep.pass() ? 0 : 1;
}

int cmd_layering(const Json& doc) {
    Json out;
    if (doc.contains("sum")) {
        const SumDesc desc = sum_from_json(doc.at("sum"));
        const Layering lay = natural_layering(desc);
        out = {{"layering", to_json(lay)}, {"report", to_json(validate_natural_properties(desc, lay))}};
    } else {
        const KTree t(ktree_from_json(need(doc, "ktree")));
        const Layering lay = bfs_layering(t);
        out = {{"layering", to_json(lay)}, {"report", to_json(validate_bfs_properties(t, lay))}};
    }
    emit(out);
    return out["report"]["pass"].get<bool>() ? 0 : 1;
}

int cmd_repro(const std::string& out_path, const std::string& only, const AcceptanceOptions& opt) {
    Json records = Json::array();
    bool all = true;
    for (const auto& c : acceptance_criteria()) {
        if (!only.empty() && c.id != only) continue;
        const auto r = run_criterion(c, opt);
        all &= r.pass;
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.id << "  " << r.detail << "\n";
        records.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                           {"seconds", r.seconds}, {"data", r.data}});
    }
    const std::filesystem::path path(out_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream(path) << records.dump(2) << "\n";
    emit({{"summary", out_path}, {"pass", all}, {"criteria", records.size()}});
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strong odd colorings: generators, constructions, exact solvers and verifiers"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "solver threads")->check(CLI::PositiveNumber);

    std::string file;
    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file,--file", file, "input document (default stdin)");
    };

    auto* gen = app.add_subcommand("gen", "generate a gadget or random instance");
    std::string gadget, params;
    std::uint64_t seed = 1;
    gen->add_option("--gadget", gadget)->required()->check(
        CLI::IsMember({"gk", "iso", "ktree", "outerplanar", "triangulation", "sum"}));
    gen->add_option("--params", params, "comma separated key=value list");
    gen->add_option("--seed", seed);

    auto* color = app.add_subcommand("color", "run a constructive coloring");
    std::string algo;
    color->add_option("--algo", algo)->required()->check(CLI::IsMember({"outerplanar", "tw", "rtw", "summand", "sum"}));
    add_file(color);

    auto* solve = app.add_subcommand("solve", "exact chromatic number for a notion");
    std::string notion = "so";
    SolverBudget budget;
    solve->add_option("--notion", notion)->check(CLI::IsMember({"so", "iso", "odd", "proper"}));
    solve->add_option("--max-colors", budget.max_colors);
    solve->add_option("--timeout", budget.time_limit, "seconds");
    solve->add_option("--node-limit", budget.node_limit);
    add_file(solve);

    auto* verify = app.add_subcommand("verify", "check a coloring");
    verify->add_option("--notion", notion)->check(
        CLI::IsMember({"so", "iso", "odd", "proper", "constrained", "facial", "hypergraph"}));
    add_file(verify);

    auto* layering = app.add_subcommand("layering", "BFS layering of a k-tree or natural layering of a sum");
    add_file(layering);

    auto* repro = app.add_subcommand("repro", "replay the acceptance experiments");
    std::string out_path = "results/summary.json", only;
    AcceptanceOptions opt;
    repro->add_option("--out", out_path);
    repro->add_option("--only", only, "run a single criterion");
    repro->add_option("--g3-budget", opt.gk3_budget_seconds, "seconds for the G3 solve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    budget.threads = threads;
    opt.threads = threads;

    try {
        if (*gen) return cmd_gen(gadget, params, seed);
        if (*repro) return cmd_repro(out_path, only, opt);
        const Json doc = read_input(file);
        if (*color) return cmd_color(algo, doc);
        if (*solve) return cmd_solve(notion, doc, budget);
        if (*verify) return cmd_verify(notion, doc);
        if (*layering) return cmd_layering(doc);
    } catch (const Failure& f) {
        std::cerr << f.what << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.kind() == "Infeasible" || e.kind() == "BudgetExceeded" ? 1 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "InputError: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
