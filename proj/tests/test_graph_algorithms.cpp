#include <random>

#include "doctest.h"
#include "maxdiam/graph_algorithms.hpp"
#include "oracles.hpp"

using namespace maxdiam;

namespace {

Graph two_triangles_with_bridge() {
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}) g.add_edge(u, v);
  return g;
}

void check_orientation(const Graph& g) {
  const Orientation o = dfs_orientation(g);
  REQUIRE(o.arcs.size() == g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [t, h] = o.arcs[e];
    CHECK(((Edge{std::min(t, h), std::max(t, h)}) == g.edge(e)));
  }
  const auto in = o.indegrees(g.vertex_count()), out = o.outdegrees(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    CHECK(in[v] >= 1);
    CHECK(in[v] <= 2);
    CHECK(out[v] >= 1);
    CHECK(out[v] <= 2);
  }
}

}  // namespace

TEST_CASE("cut edges match edge deletion") {
  CHECK(cut_edges(named::path(3)) == std::vector<EdgeId>{0, 1});
  CHECK(cut_edges(named::cycle(5)).empty());
  const Graph tt = two_triangles_with_bridge();
  CHECK(cut_edges(tt) == std::vector<EdgeId>{tt.edge_id(2, 3)});

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 14, 0.25, rng);
    const auto expected = oracle::bridges_by_deletion(g);
    CHECK(cut_edges(g) == std::vector<EdgeId>(expected.begin(), expected.end()));
  }
}

TEST_CASE("DFS orientation of bridgeless cubic graphs") {
  check_orientation(named::complete(4));
  check_orientation(named::complete_bipartite(3, 3));
  check_orientation(named::petersen());
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const ColoredGraph cg = random_matching_union(2 * (2 + trial % 15), 3, rng);
    REQUIRE(cut_edges(cg.graph).empty());
    check_orientation(cg.graph);
  }
  CHECK_THROWS_AS(dfs_orientation(named::cycle(4)), PreconditionViolation);
  // Cubic with a bridge: two copies of K4 with one edge subdivided, joined
  // at the subdivision vertices.
  Graph bridged(10);
  for (Vertex base : {0u, 5u})
    for (auto [u, v] : {std::pair{0u, 2u}, {0u, 3u}, {1u, 2u}, {1u, 3u}, {2u, 3u}, {0u, 4u}, {1u, 4u}})
      bridged.add_edge(base + u, base + v);
  bridged.add_edge(4, 9);
  REQUIRE(bridged.is_regular(3));
  CHECK_THROWS_AS(dfs_orientation(bridged), PreconditionViolation);
}

TEST_CASE("odd girth") {
  CHECK(odd_girth(named::cycle(5)) == 5u);
  CHECK(odd_girth(named::complete(3)) == 3u);
  CHECK_FALSE(odd_girth(named::complete_bipartite(3, 3)));
  CHECK(odd_girth(named::petersen()) == 5u);
  CHECK_FALSE(odd_girth(Graph(0)));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.2, rng);
    const auto got = odd_girth(g);
    REQUIRE(got == oracle::odd_girth_by_walks(g));
    if (got) CHECK(*got % 2 == 1);
    // Deleting an edge never shortens the odd girth.
    if (g.edge_count() > 0) {
      std::vector<EdgeId> keep;
      for (EdgeId e = 1; e < g.edge_count(); ++e) keep.push_back(e);
      const auto smaller = odd_girth(g.edge_subgraph(keep));
      if (got && smaller) CHECK(*smaller >= *got);
      if (!got) CHECK_FALSE(smaller);
    }
  }
}

TEST_CASE("induced subgraph freeness") {
  CHECK(is_induced_subgraph_free(named::cycle(7), named::path(7)));
  CHECK_FALSE(is_induced_subgraph_free(named::path(7), named::path(7)));
  CHECK(is_induced_subgraph_free(named::complete(4), named::path(3)));
  CHECK_FALSE(is_induced_subgraph_free(named::cycle(8), named::path(7)));

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 7, 0.45, rng);
    const Graph h = oracle::random_graph(2 + trial % 4, 0.5, rng);
    CHECK(is_induced_subgraph_free(g, h) == oracle::induced_free_by_subsets(g, h));
  }
}

TEST_CASE("bipartiteness and components") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.2, rng);
    CHECK(is_bipartite(g) == oracle::bipartite_by_enumeration(g));
    const auto comps = connected_components(g);
    std::vector<int> owner(g.vertex_count(), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (Vertex v : comps[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
      }
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
      REQUIRE(owner[a] != -1);
      for (Vertex b = a + 1; b < g.vertex_count(); ++b)
        CHECK((owner[a] == owner[b]) == oracle::connected_without(g, a, b, g.edge_count()));
    }
  }
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(81);
  for (int d : {1, 2, 3, 4}) {
    const ColoredGraph cg = random_matching_union(10, d, rng);
    CHECK(cg.graph.is_regular(d));
    CHECK(is_proper_edge_coloring(cg.graph, cg.coloring, d));
  }
  CHECK_THROWS(random_matching_union(7, 3, rng));

  std::mt19937_64 a(5), b(5);
  const Graph ga = random_gnp(20, 0.3, a), gb = random_gnp(20, 0.3, b);
  CHECK(ga.edges() == gb.edges());
  CHECK(random_gnp(6, 1.0, a).edge_count() == 15);
  CHECK(random_gnp(6, 0.0, a).edge_count() == 0);
}
