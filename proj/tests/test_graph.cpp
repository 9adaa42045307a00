#include "doctest.h"
#include "maxdiam/graph.hpp"
#include "maxdiam/graph_algorithms.hpp"

using namespace maxdiam;

TEST_CASE("graph construction") {
  Graph g(3);
  CHECK(g.add_edge(2, 0) == 0);
  CHECK(g.edge(0) == Edge{0, 2});
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 2));
  CHECK_THROWS(g.add_edge(0, 7));
  CHECK(g.add_vertex() == 3);
  CHECK(g.vertex_count() == 4);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS(g.edge_id(0, 1));

  const std::vector<EdgeId> keep{0};
  Graph h = named::path(4);
  CHECK(h.edge_subgraph(keep).edge_count() == 1);
  CHECK(h.edge_subgraph(keep).vertex_count() == 4);
}

TEST_CASE("named graphs") {
  const Graph pet = named::petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.is_regular(3));

  const Graph chv = named::chvatal();
  CHECK(chv.vertex_count() == 12);
  CHECK(chv.edge_count() == 24);
  CHECK(chv.is_regular(4));
  // Triangle-free.
  for (const Edge& e : chv.edges())
    for (Vertex w : chv.neighbors(e.u)) CHECK_FALSE(chv.has_edge(e.v, w));

  CHECK(named::complete(5).edge_count() == 10);
  CHECK(named::complete_bipartite(3, 4).edge_count() == 12);
  CHECK(named::cycle(5).is_regular(2));
  CHECK(named::path(7).edge_count() == 6);
  CHECK(named::path(1).edge_count() == 0);
}

TEST_CASE("hypergraphs") {
  Hypergraph h(4);
  h.add_hyperedge({0, 1, 2});
  h.add_hyperedge({1, 2, 3});
  CHECK(h.is_uniform(3));
  CHECK_FALSE(h.is_regular(2));
  CHECK_THROWS(h.add_hyperedge({0, 0, 1}));
  CHECK_THROWS(h.add_hyperedge({0, 9, 1}));
  const Graph p = h.primal_graph();
  CHECK(p.edge_count() == 5);
  CHECK_FALSE(p.has_edge(0, 3));
}

TEST_CASE("incidence hypergraph") {
  const Hypergraph k4 = incidence_hypergraph(named::complete(4));
  CHECK(k4.vertex_count() == 6);
  CHECK(k4.hyperedges().size() == 4);
  CHECK(k4.is_uniform(3));
  CHECK(k4.is_regular(2));

  const Hypergraph k3 = incidence_hypergraph(named::complete(3));
  CHECK(k3.hyperedges().size() == 3);
  CHECK(k3.is_uniform(2));
}

TEST_CASE("orientation degrees") {
  Orientation o{{{0, 1}, {1, 2}, {2, 0}}};
  CHECK(o.indegrees(3) == std::vector<std::size_t>{1, 1, 1});
  CHECK(o.outdegrees(3) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("coloring validity") {
  const Graph c5 = named::cycle(5);
  CHECK(is_proper_coloring(c5, {0, 1, 0, 1, 2}, 3));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, 0}, 3));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1, 0, 1, 3}, 3));
  CHECK_FALSE(is_proper_coloring(c5, {0, 1}, 3));
  const Graph p3 = named::path(3);
  CHECK(is_proper_edge_coloring(p3, {0, 1}, 2));
  CHECK_FALSE(is_proper_edge_coloring(p3, {1, 1}, 2));
}
