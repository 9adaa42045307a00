#include <random>
#include <set>

#include "doctest.h"
#include "maxdiam/coloring.hpp"
#include "maxdiam/edge_coloring.hpp"
#include "maxdiam/graph_algorithms.hpp"
#include "oracles.hpp"

using namespace maxdiam;

namespace {

Graph two_triangles_with_bridge() {
  Graph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("find_coloring and enumeration agree with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    for (int k : {2, 3}) {
      const std::uint64_t expected = oracle::count_colorings(g, k);
      const ColoringSearchResult first = find_coloring(g, k);
      CHECK((first.status == SearchStatus::found) == (expected > 0));
      if (first.status == SearchStatus::found) CHECK(is_proper_coloring(g, first.coloring, k));
      const ColoringEnumeration all = enumerate_colorings(g, k);
      CHECK(all.complete);
      CHECK(all.total_count == expected);
      CHECK((all.representative_count > 0) == (expected > 0));
      for (const auto& c : all.colorings) CHECK(is_proper_coloring(g, c, k));
      SearchOptions plain;
      plain.symmetry_breaking = false;
      CHECK(enumerate_colorings(g, k, plain).representative_count == expected);
    }
  }
}

TEST_CASE("search budget") {
  SearchOptions tiny;
  tiny.node_budget = 3;
  CHECK(find_coloring(named::petersen(), 2, tiny).status == SearchStatus::budget_exceeded);
  CHECK_FALSE(enumerate_colorings(named::petersen(), 3, tiny).complete);
  const PartialPredicate never_decided = [](std::span<const int>) { return Verdict::undetermined; };
  CHECK(forall_colorings(named::petersen(), 3, never_decided, tiny).outcome == ForallResult::Outcome::budget_exceeded);
}

TEST_CASE("forall over colorings") {
  const Graph c5 = named::cycle(5);
  CHECK(forall_colorings(c5, 3, distinct_colors_predicate({0, 1})).outcome == ForallResult::Outcome::holds);
  const ForallResult r = forall_colorings(c5, 3, distinct_colors_predicate({0, 2}));
  REQUIRE(r.outcome == ForallResult::Outcome::refuted);
  REQUIRE(r.counterexample);
  CHECK(is_proper_coloring(c5, *r.counterexample, 3));
  CHECK((*r.counterexample)[0] == (*r.counterexample)[2]);
  // Vacuous on an uncolorable graph.
  CHECK(forall_colorings(named::complete(4), 3, distinct_colors_predicate({0, 1})).outcome ==
        ForallResult::Outcome::holds);
}

TEST_CASE("rainbow colorings") {
  Hypergraph single(3);
  single.add_hyperedge({0, 1, 2});
  CHECK(rainbow_first(single, 3).status == SearchStatus::found);
  CHECK(rainbow_all(single, 3).representative_count == 1);

  Hypergraph k4(4);
  const Graph k4_graph = named::complete(4);
  for (const Edge& e : k4_graph.edges()) k4.add_hyperedge({e.u, e.v});
  CHECK(rainbow_first(k4, 3).status == SearchStatus::none);

  CHECK_FALSE(oracle::edge_colorable(named::petersen(), 3));
  CHECK(rainbow_first(incidence_hypergraph(named::petersen()), 3).status == SearchStatus::none);
}

TEST_CASE("rainbow 3-colorability of the incidence hypergraph is 3-edge-colorability") {
  std::size_t checked = 0, class_one = 0;
  for (std::size_t n : {4, 6, 8}) {
    for (const Graph& g : oracle::all_cubic_graphs(n)) {
      const bool colorable = oracle::edge_colorable_backtrack(g, 3);
      REQUIRE((rainbow_first(incidence_hypergraph(g), 3).status == SearchStatus::found) == colorable);
      ++checked;
      class_one += colorable;
    }
  }
  CHECK(checked == 1 + 70 + 19355);
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_cubic(10, rng);
    CHECK((rainbow_first(incidence_hypergraph(g), 3).status == SearchStatus::found) ==
          oracle::edge_colorable_backtrack(g, 3));
  }
  // Every cubic graph on at most 8 vertices is class 1.
  CHECK(class_one == checked);
}

TEST_CASE("edge coloring") {
  const Graph k44 = named::complete_bipartite(4, 4);
  const auto c = edge_coloring(k44, 4);
  REQUIRE(c);
  CHECK(is_proper_edge_coloring(k44, *c, 4));
  CHECK_FALSE(edge_coloring(named::petersen(), 3));
  CHECK_FALSE(edge_coloring(named::complete(4), 2));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_cubic(2 * (2 + trial % 6), rng);
    const auto four = edge_coloring(g, 4);
    REQUIRE(four);
    CHECK(is_proper_edge_coloring(g, *four, 4));
    CHECK(edge_coloring(g, 3).has_value() == oracle::edge_colorable_backtrack(g, 3));
  }
}

TEST_CASE("Misra-Gries uses at most max degree + 1 colors") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 14, 0.4, rng);
    const EdgeColoring c = misra_gries_edge_coloring(g);
    CHECK(is_proper_edge_coloring(g, c, static_cast<int>(g.max_degree()) + 1));
  }
}

TEST_CASE("line graph") {
  const Graph l = line_graph(named::complete(4));
  CHECK(l.vertex_count() == 6);
  CHECK(l.is_regular(4));
  CHECK(line_graph(named::path(3)).edge_count() == 1);
}

TEST_CASE("matching decomposition") {
  const Graph k44 = named::complete_bipartite(4, 4);
  const auto parts = matching_decomposition(k44, *edge_coloring(k44, 4), 4);
  REQUIRE(parts.size() == 4);
  for (const auto& m : parts) CHECK(m.size() == 4);

  Graph one(2);
  one.add_edge(0, 1);
  CHECK(matching_decomposition(one, {0}, 1) == std::vector<std::vector<EdgeId>>{{0}});
  CHECK_THROWS(matching_decomposition(named::path(3), {0, 0}, 1));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const ColoredGraph cg = random_matching_union(12, 4, rng);
    const auto ms = matching_decomposition(cg.graph, cg.coloring, 4);
    std::set<EdgeId> seen;
    for (const auto& m : ms) {
      std::set<Vertex> ends;
      for (EdgeId e : m) {
        CHECK(seen.insert(e).second);
        CHECK(ends.insert(cg.graph.edge(e).u).second);
        CHECK(ends.insert(cg.graph.edge(e).v).second);
      }
    }
    CHECK(seen.size() == cg.graph.edge_count());
  }
}

TEST_CASE("3-edge-coloring through bridge splitting") {
  const Graph tt = two_triangles_with_bridge();
  CHECK(oracle::edge_colorable_backtrack(tt, 3));
  const auto c = three_edge_color_via_bridge_splitting(tt);
  REQUIRE(c);
  CHECK(is_proper_edge_coloring(tt, *c, 3));

  const auto k4 = three_edge_color_via_bridge_splitting(named::complete(4));
  REQUIRE(k4);
  CHECK(is_proper_edge_coloring(named::complete(4), *k4, 3));
  CHECK_FALSE(three_edge_color_via_bridge_splitting(named::petersen()));
  CHECK_THROWS(three_edge_color_via_bridge_splitting(named::complete(5)));

  // Random graphs of max degree 3, bridges included.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_graph(4 + trial % 9, 0.3, rng);
    Graph capped(g.vertex_count());
    for (const Edge& e : g.edges())
      if (capped.degree(e.u) < 3 && capped.degree(e.v) < 3) capped.add_edge(e.u, e.v);
    const auto got = three_edge_color_via_bridge_splitting(capped);
    REQUIRE(got.has_value() == oracle::edge_colorable_backtrack(capped, 3));
    if (got) CHECK(is_proper_edge_coloring(capped, *got, 3));
  }
}
