#include <filesystem>
#include <random>

#include "doctest.h"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/io.hpp"
#include "maxdiam/sphere.hpp"
#include "oracles.hpp"

using namespace maxdiam;

TEST_CASE("graph JSON round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracle::random_graph(trial % 9, 0.4, rng);
    const Graph back = graph_from_json(Json::parse(graph_to_json(g).dump()));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("malformed graphs") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": []})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": -1, "edges": []})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 3]]})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1, 2]]})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[1, 1]]})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [[0, 1], [1, 0]]})")), FormatError);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 3, "edges": [["a", 1]]})")), FormatError);
}

TEST_CASE("hypergraph JSON") {
  const Hypergraph h = incidence_hypergraph(named::complete(4));
  const Hypergraph back = hypergraph_from_json(hypergraph_to_json(h));
  CHECK(back.vertex_count() == h.vertex_count());
  CHECK(back.hyperedges() == h.hyperedges());
  CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"n": 2, "hyperedges": [[0, 2]]})")), FormatError);
  CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"n": 2, "hyperedges": 5})")), FormatError);
}

TEST_CASE("edge lists") {
  const Graph g = graph_from_edge_list("# a path\n0 1\n\n1 2  # trailing\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(2, 3));
  CHECK(graph_from_edge_list("").vertex_count() == 0);
  CHECK_THROWS_AS(graph_from_edge_list("0 1\n1\n"), FormatError);
  CHECK_THROWS_AS(graph_from_edge_list("0 x\n"), FormatError);
  CHECK_THROWS_AS(graph_from_edge_list("2 2\n"), FormatError);
}

TEST_CASE("pointset JSON round trip is canonical") {
  Pointset p(Metric::hamming, 3);
  p.add(BitVector::from_string("110"), "c");
  p.add(BitVector::from_string("000"), "a");
  p.add(BitVector::from_string("011"), "b");
  const Json j = pointset_to_json(p);
  CHECK(j["points"] == Json::array({"000", "011", "110"}));
  CHECK(j["labels"] == Json::array({"a", "b", "c"}));
  const Pointset back = pointset_from_json(j);
  CHECK(pointset_to_json(back) == j);
  CHECK(back.find_label("c") == 2u);

  std::mt19937_64 rng(9);
  for (Metric m : {Metric::l1_int, Metric::linf_int}) {
    const Pointset q = oracle::random_ints(m, 7, 3, rng);
    const Json once = pointset_to_json(q);
    CHECK(pointset_to_json(pointset_from_json(once)) == once);
    CHECK(pointset_diameter(pointset_from_json(once)).value == pointset_diameter(q).value);
  }

  const Pointset sphere = single_region_instance(3).to_pointset();
  const Json sj = pointset_to_json(sphere);
  const Pointset sback = pointset_from_json(sj);
  CHECK(sback.size() == sphere.size());
  CHECK(pointset_to_json(sback) == sj);
}

TEST_CASE("malformed pointsets") {
  CHECK_THROWS_AS(pointset_from_json(Json::parse(R"({"metric": "hamming", "dim": 2})")), FormatError);
  CHECK_THROWS_AS(pointset_from_json(Json::parse(R"({"metric": "l7", "dim": 2, "points": []})")), FormatError);
  CHECK_THROWS_AS(pointset_from_json(Json::parse(R"({"metric": "hamming", "dim": 2, "points": ["011"]})")),
                  FormatError);
  CHECK_THROWS_AS(pointset_from_json(Json::parse(R"({"metric": "hamming", "dim": 2, "points": [[0, 1]]})")),
                  FormatError);
  CHECK_THROWS_AS(
      pointset_from_json(Json::parse(R"({"metric": "hamming", "dim": 2, "points": ["01"], "labels": []})")),
      FormatError);
  CHECK_THROWS_AS(pointset_from_json(Json::parse(
                      R"({"metric": "l2_sphere_lattice", "dim": 3, "points": [{"axes": [0, 1, 2], "pos": 0,
                          "coeffs": [1, 1, 1], "kappa": 2}]})")),
                  FormatError);
}

TEST_CASE("graph files") {
  const auto dir = std::filesystem::temp_directory_path() / "maxdiam_test_io";
  std::filesystem::create_directories(dir);
  write_text_file(dir / "g.json", graph_to_json(named::petersen()).dump());
  write_text_file(dir / "g.txt", "0 1\n1 2\n");
  write_text_file(dir / "bad.json", "{ not json");
  CHECK(read_graph_file(dir / "g.json").edge_count() == 15);
  CHECK(read_graph_file(dir / "g.txt").edge_count() == 2);
  CHECK_THROWS_AS(read_graph_file(dir / "bad.json"), FormatError);
  CHECK_THROWS_AS(read_graph_file(dir / "missing.json"), FormatError);
  CHECK_THROWS_AS(read_json_file(dir / "bad.json"), FormatError);
  std::filesystem::remove_all(dir);
}
