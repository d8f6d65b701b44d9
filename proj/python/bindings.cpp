#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sodd/constructive.hpp"
#include "sodd/exact.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/io.hpp"
#include "sodd/outerplanar.hpp"
#include "sodd/verifier.hpp"

namespace py = pybind11;
using namespace sodd;

namespace {

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

py::dict report_dict(const Report& r) {
    py::list violations;
    for (const auto& v : r.violations)
        violations.append(py::dict(py::arg("property") = v.property, py::arg("witness") = v.witness,
                                   py::arg("detail") = v.detail));
    return py::dict(py::arg("pass") = r.pass(), py::arg("checked") = r.checked, py::arg("violations") = violations);
}

py::dict result_dict(const SolveResult& r) {
    return py::dict(py::arg("value") = r.value, py::arg("witness") = r.witness.colors,
                    py::arg("proven_infeasible") = r.proven_infeasible, py::arg("nodes") = r.nodes,
                    py::arg("seconds") = r.seconds);
}

SolverBudget budget(int max_colors, double timeout, int threads) {
    SolverBudget b;
    b.max_colors = max_colors;
    b.time_limit = timeout;
    b.threads = threads;
    return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Strong odd colorings: generators, constructions, exact solvers and verifiers";

    py::register_exception<Error>(m, "Error");

    py::class_<Graph>(m, "Graph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("edges", &Graph::edges)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("has_edge", &Graph::has_edge)
        .def("__eq__", &Graph::operator==)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("complete_graph", &complete_graph);
    m.def("path_graph", &path_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("strong_product", &strong_product, py::arg("h"), py::arg("path_len"));
    m.def("join_with_clique", &join_with_clique, py::arg("g"), py::arg("t"));
    m.def("square", &square);
    m.def("gen_gk", &gen_gk, py::arg("k"), py::arg("tree_edges") = false);
    m.def("gen_iso_gadget", &gen_iso_gadget, py::arg("n"));

    m.def("is_proper", [](const Graph& g, std::vector<int> c) { return report_dict(is_proper(g, Coloring(std::move(c)))); });
    m.def("is_strong_odd",
          [](const Graph& g, std::vector<int> c) { return report_dict(is_strong_odd(g, Coloring(std::move(c)))); });
    m.def("is_improper_strong_odd", [](const Graph& g, std::vector<int> c) {
        return report_dict(is_improper_strong_odd(g, Coloring(std::move(c))));
    });
    m.def("is_odd_coloring",
          [](const Graph& g, std::vector<int> c) { return report_dict(is_odd_coloring(g, Coloring(std::move(c)))); });

    m.def("chi_so", [](const Graph& g, int max_colors, double timeout, int threads) {
        return result_dict(chi_so_exact(g, budget(max_colors, timeout, threads)));
    }, py::arg("g"), py::arg("max_colors") = 0, py::arg("timeout") = 0.0, py::arg("threads") = 1);
    m.def("chi_iso", [](const Graph& g, int max_colors, double timeout, int threads) {
        return result_dict(chi_iso_exact(g, budget(max_colors, timeout, threads)));
    }, py::arg("g"), py::arg("max_colors") = 0, py::arg("timeout") = 0.0, py::arg("threads") = 1);
    m.def("chi_odd", [](const Graph& g, int max_colors, double timeout, int threads) {
        return result_dict(chi_odd_exact(g, budget(max_colors, timeout, threads)));
    }, py::arg("g"), py::arg("max_colors") = 0, py::arg("timeout") = 0.0, py::arg("threads") = 1);
    m.def("enumerate_oracle", [](const Graph& g, int t, bool proper) {
        return enumerate_oracle(g, t, MultiplicityRule::odd(), proper);
    }, py::arg("g"), py::arg("t"), py::arg("proper") = true);

    // Outerplanar host given as a JSON k-tree document string; returns (host, coloring).
    m.def("random_outerplanar", [](int n, std::uint64_t seed) {
        const KTreeSeq seq = gen_random_maximal_outerplanar(n, seed);
        return py::make_tuple(build_ktree(seq), to_json(seq).dump());
    }, py::arg("n"), py::arg("seed"));
    m.def("color_outerplanar", [](const std::string& ktree, const Graph& mask) {
        return color_outerplanar(ktree_from_json(Json::parse(ktree)), mask).colors;
    }, py::arg("ktree"), py::arg("mask"));
}
