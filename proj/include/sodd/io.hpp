#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "sodd/graph.hpp"
#include "sodd/ktree.hpp"
#include "sodd/report.hpp"
#include "sodd/sum.hpp"

namespace sodd {

using Json = nlohmann::json;

// Malformed input raises Error("InputError", ...).

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json to_json(const DiGraph& d);
DiGraph digraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const PlaneGraph& p);
PlaneGraph plane_from_json(const Json& j);

// {"colors": {"<vertex>": color}} with optional "tuples".
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j, int n);

Json to_json(const KTreeSeq& s);
KTreeSeq ktree_from_json(const Json& j);
Json to_json(const SumDesc& d);
SumDesc sum_from_json(const Json& j);

Json to_json(const Layering& l);
Json to_json(const Report& r);

// "n m" header, then one "u v" line per edge; "n m directed" for digraphs.
Graph parse_edge_list(std::istream& in);
DiGraph parse_arc_list(std::istream& in);
std::string to_edge_list(const Graph& g);

// A JSON document, or an edge list wrapped as {"graph": ...}.
Json read_document(std::istream& in);

}  // namespace sodd
