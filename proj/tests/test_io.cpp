#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "sodd/errors.hpp"
#include "sodd/gadgets.hpp"
#include "sodd/io.hpp"

using namespace sodd;

TEST_CASE("graph round trip") {
    const Graph g = gen_gk(2);
    CHECK(graph_from_json(to_json(g)) == g);
    std::istringstream in(to_edge_list(g));
    CHECK(parse_edge_list(in) == g);
}

TEST_CASE("coloring round trip") {
    const Coloring c({3, 1, 4});
    CHECK(coloring_from_json(to_json(c), 3).colors == c.colors);
    CHECK(to_json(c).dump() == R"({"colors":{"0":3,"1":1,"2":4}})");
}

TEST_CASE("k-tree and sum round trip") {
    const auto seq = gen_random_maximal_outerplanar(12, 4);
    CHECK(build_ktree(ktree_from_json(to_json(seq))) == build_ktree(seq));
    const SumDesc d = gen_random_sum({}, 8);
    CHECK(build_sum(sum_from_json(to_json(d))).graph == build_sum(d).graph);
}

TEST_CASE("documents") {
    std::istringstream el("3 2\n0 1\n1 2\n");
    CHECK(graph_from_json(read_document(el).at("graph")) == path_graph(3));
    std::istringstream bad("{\"graph\": ");
    CHECK_THROWS_AS(read_document(bad), Error);
    std::istringstream short_list("3 2\n0 1\n");
    CHECK_THROWS_AS(read_document(short_list), Error);
}
