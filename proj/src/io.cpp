#include "sodd/io.hpp"

#include <sstream>

#include "sodd/errors.hpp"

namespace sodd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("InputError", what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

VertexSet as_set(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    VertexSet s;
    for (const auto& x : j) s.push_back(as_int(x, what));
    return s;
}

std::vector<Edge> as_pairs(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<Edge> r;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad(std::string(what) + " entries must be pairs");
        r.emplace_back(as_int(e[0], what), as_int(e[1], what));
    }
    return r;
}

template <class F>
auto rethrow(F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == "InputError") throw;
        bad(e.what());
    } catch (const nlohmann::json::exception& e) {
        bad(e.what());
    }
}

}  // namespace

Json to_json(const Graph& g) {
    Json j{{"n", g.n()}, {"edges", Json::array()}};
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    if (!g.labels.empty()) j["labels"] = g.labels;
    return j;
}

Graph graph_from_json(const Json& j) {
    return rethrow([&] {
        Graph g(as_int(field(j, "n"), "n"), as_pairs(field(j, "edges"), "edges"));
        if (j.contains("labels")) g.labels = j.at("labels").get<std::vector<std::string>>();
        return g;
    });
}

Json to_json(const DiGraph& d) {
    Json j{{"n", d.n()}, {"arcs", Json::array()}};
    for (auto [u, v] : d.arcs()) j["arcs"].push_back({u, v});
    return j;
}

DiGraph digraph_from_json(const Json& j) {
    return rethrow([&] { return DiGraph(as_int(field(j, "n"), "n"), as_pairs(field(j, "arcs"), "arcs")); });
}

Json to_json(const Hypergraph& h) { return {{"n", h.n}, {"hyperedges", h.hyperedges}}; }

Hypergraph hypergraph_from_json(const Json& j) {
    return rethrow([&] {
        Hypergraph h;
        h.n = as_int(field(j, "n"), "n");
        for (const auto& e : field(j, "hyperedges")) h.hyperedges.push_back(as_set(e, "hyperedge"));
        h.validate();
        return h;
    });
}

Json to_json(const PlaneGraph& p) {
    Json j = to_json(p.graph);
    j["faces"] = p.faces;
    return j;
}

PlaneGraph plane_from_json(const Json& j) {
    return rethrow([&] {
        PlaneGraph p;
        p.graph = graph_from_json(j);
        for (const auto& f : field(j, "faces")) p.faces.push_back(as_set(f, "face"));
        p.validate();
        return p;
    });
}

Json to_json(const Coloring& c) {
    Json colors = Json::object();
    for (int v = 0; v < c.size(); ++v)
        if (c[v] != Coloring::kUnassigned) colors[std::to_string(v)] = c[v];
    Json j{{"colors", colors}};
    if (!c.tuples.empty()) j["tuples"] = c.tuples;
    return j;
}

Coloring coloring_from_json(const Json& j, int n) {
    return rethrow([&] {
        const Json& cs = field(j, "colors");
        Coloring c(std::vector<int>(n, Coloring::kUnassigned));
        if (cs.is_array()) {
            if (static_cast<int>(cs.size()) != n) bad("color array length differs from n");
            for (int v = 0; v < n; ++v) c.colors[v] = as_int(cs[v], "color");
        } else if (cs.is_object()) {
            for (const auto& [key, val] : cs.items()) {
                int v;
                try {
                    std::size_t used = 0;
                    v = std::stoi(key, &used);
                    if (used != key.size()) bad("vertex key \"" + key + "\" is not an integer");
                } catch (const std::logic_error&) {
                    bad("vertex key \"" + key + "\" is not an integer");
                }
                if (v < 0 || v >= n) bad("vertex " + key + " out of range");
                const int col = as_int(val, "color");
                if (col < 0) bad("colors must be nonnegative");
                c.colors[v] = col;
            }
        } else {
            bad("\"colors\" must be an object or array");
        }
        return c;
    });
}

Json to_json(const KTreeSeq& s) {
    Json steps = Json::array();
    for (const auto& st : s.steps) steps.push_back({{"v", st.v}, {"parents", st.parents}});
    return {{"k", s.k}, {"initial", s.initial}, {"steps", steps}};
}

KTreeSeq ktree_from_json(const Json& j) {
    return rethrow([&] {
        KTreeSeq s;
        s.k = as_int(field(j, "k"), "k");
        s.initial = as_set(field(j, "initial"), "initial");
        for (const auto& st : field(j, "steps"))
            s.steps.push_back({as_int(field(st, "v"), "v"), as_set(field(st, "parents"), "parents")});
        return s;
    });
}

Json to_json(const SumDesc& d) {
    Json sm = Json::array(), at = Json::array();
    for (const auto& s : d.summands) sm.push_back({{"ktree", to_json(s.ktree)}, {"path_len", s.path_len}});
    for (const auto& a : d.attachments) at.push_back({{"host_clique", a.host_clique}, {"new_clique", a.new_clique}});
    return {{"w", d.w}, {"k", d.k}, {"t", d.t}, {"summands", sm}, {"attachments", at}};
}

SumDesc sum_from_json(const Json& j) {
    return rethrow([&] {
        SumDesc d;
        d.w = as_int(field(j, "w"), "w");
        d.k = as_int(field(j, "k"), "k");
        d.t = as_int(field(j, "t"), "t");
        for (const auto& s : field(j, "summands"))
            d.summands.push_back({ktree_from_json(field(s, "ktree")), as_int(field(s, "path_len"), "path_len")});
        if (j.contains("attachments"))
            for (const auto& a : j.at("attachments"))
                d.attachments.push_back({as_set(field(a, "host_clique"), "host_clique"),
                                         as_set(field(a, "new_clique"), "new_clique")});
        return d;
    });
}

Json to_json(const Layering& l) {
    return {{"kind", l.kind == LayeringKind::BFS ? "bfs" : "natural"}, {"layers", l.layers}};
}

Json to_json(const Report& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"property", x.property}, {"witness", x.witness}, {"detail", x.detail}});
    return {{"pass", r.pass()}, {"checked", r.checked}, {"violations", v}};
}

namespace {

std::pair<int, int> read_header(std::istream& in, bool& directed) {
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t\r")] == '#')
            continue;
        std::istringstream ls(line);
        long long n, m;
        if (!(ls >> n >> m) || n < 0 || m < 0) bad("edge list header must be \"n m\"");
        std::string word;
        directed = static_cast<bool>(ls >> word) && word == "directed";
        return {static_cast<int>(n), static_cast<int>(m)};
    }
    bad("empty edge list");
}

std::vector<Edge> read_pairs(std::istream& in, int m) {
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) bad("edge list ends after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        es.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return es;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    bool directed = false;
    auto [n, m] = read_header(in, directed);
    if (directed) bad("expected an undirected edge list");
    auto es = read_pairs(in, m);
    return rethrow([&] { return Graph(n, es); });
}

DiGraph parse_arc_list(std::istream& in) {
    bool directed = false;
    auto [n, m] = read_header(in, directed);
    if (!directed) bad("expected \"n m directed\"");
    auto es = read_pairs(in, m);
    return rethrow([&] { return DiGraph(n, es); });
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Json read_document(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) bad("empty input");
    if (text[first] == '{') {
        try {
            return Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            bad(e.what());
        }
    }
    std::istringstream is(text);
    bool directed = false;
    auto [n, m] = read_header(is, directed);
    auto es = read_pairs(is, m);
    if (directed) return {{"digraphs", Json::array({to_json(rethrow([&] { return DiGraph(n, es); }))})}};
    return {{"graph", to_json(rethrow([&] { return Graph(n, es); }))}};
}

}  // namespace sodd
