#pragma once

// JSON and text formats for graphs, hypergraphs and pointsets.
//
//   graph       {"n": 4, "edges": [[0,1],[1,2]]}
//   hypergraph  {"n": 6, "hyperedges": [[0,1,2],[2,3,4]]}
//   edge list   one "u v" pair per line, 0-indexed; '#' starts a comment
//   pointset    {"metric": "hamming", "dim": 4, "points": [...], "labels": [...]}
//
// Pointset points are bitstrings for hamming, integer arrays for l1_int and
// linf_int, and {"axes":[a,b,c],"pos":p,"coeffs":[x,y,z],"kappa":k} objects
// for l2_sphere_lattice. Written pointsets list points in lexicographic order
// of their serialized form so files diff cleanly.

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "maxdiam/geometry.hpp"
#include "maxdiam/graph.hpp"

namespace maxdiam {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
Graph graph_from_edge_list(const std::string& text);

Json point_to_json(const Point& p);
Point point_from_json(Metric metric, const Json& j);
/// Canonical form: points sorted by serialized text, labels permuted along.
Json pointset_to_json(const Pointset& ps);
Pointset pointset_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
/// Reads JSON or, when the content does not start with '{', an edge list.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace maxdiam
