#include <random>

#include "doctest.h"
#include "maxdiam/clustering.hpp"
#include "maxdiam/edge_coloring.hpp"
#include "maxdiam/embedding.hpp"
#include "maxdiam/gadgets.hpp"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/sphere.hpp"
#include "oracles.hpp"

using namespace maxdiam;

namespace {

Pointset line(std::int64_t count) {
  Pointset p(Metric::l1_int, 1);
  for (std::int64_t x = 0; x < count; ++x) p.add(IntVector({x}));
  return p;
}

std::vector<std::vector<Rational>> rational_points(const std::vector<std::vector<int>>& raw) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : raw) out.emplace_back(r.begin(), r.end());
  return out;
}

Rational sq_dist(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

}  // namespace

TEST_CASE("clustering diameter") {
  const Pointset p = line(5);
  CHECK(clustering_diameter(p, {0, 0, 1, 1, 1}, 2).value == Distance::integer(2));
  CHECK(clustering_diameter(p, {0, 1, 2, 0, 1}, 3).value == Distance::integer(3));
  CHECK_THROWS(clustering_diameter(p, {0, 0, 1}, 2));
  CHECK_THROWS(clustering_diameter(p, {0, 0, 1, 1, 2}, 2));
}

TEST_CASE("Gonzalez seeding") {
  const Pointset p = line(10);
  CHECK(gonzalez_cluster(p, 10).diameter.value == Distance::integer(0));
  CHECK(gonzalez_cluster(p, 12).diameter.value == Distance::integer(0));
  const Clustering one = gonzalez_cluster(p, 1);
  CHECK(one.diameter.value == Distance::integer(9));

  // Farthest-point seeding is within twice the optimum.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Pointset q = oracle::random_bits(7, 8, rng);
    for (int k : {2, 3}) {
      const Clustering g = gonzalez_cluster(q, k);
      CHECK(clustering_diameter(q, g.assignment, k).value == g.diameter.value);
      const BigInt opt = oracle::exhaustive_optimum(q, k).integer_value();
      CHECK(g.diameter.value.integer_value() <= 2 * opt);
    }
  }
  Pointset had(Metric::hamming, 8);
  for (const auto& w : hadamard_code(8).plus_words) had.add(w);
  const Clustering h = gonzalez_cluster(had, 3);
  CHECK(h.diameter.value.integer_value() <= 2 * oracle::exhaustive_optimum(had, 3).integer_value());
}

TEST_CASE("threshold graphs") {
  const Pointset p = line(4);
  const Graph g = threshold_graph(p, Distance::integer(1));
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("exact clustering") {
  const Pointset p = line(10);
  CHECK(exact_cluster(p, 3).diameter.value == Distance::integer(3));
  CHECK(exact_cluster(p, 1).diameter.value == pointset_diameter(p).value);
  CHECK(exact_cluster(p, 4).diameter.value == Distance::integer(2));
  CHECK_THROWS(exact_cluster(p, 5));
  CHECK_THROWS(exact_cluster(p, 2, {}, 5));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 7;
    const Metric m = trial % 3 == 0 ? Metric::hamming : (trial % 3 == 1 ? Metric::l1_int : Metric::linf_int);
    const Pointset q = m == Metric::hamming ? oracle::random_bits(n, 6, rng) : oracle::random_ints(m, n, 2, rng);
    for (int k : {2, 3}) {
      const Clustering c = exact_cluster(q, k);
      CHECK(c.diameter.value == oracle::exhaustive_optimum(q, k));
      CHECK(clustering_diameter(q, c.assignment, k).value == c.diameter.value);
    }
  }
}

TEST_CASE("exact clustering of sphere points") {
  const Pointset small = single_region_instance(1).to_pointset();
  for (int k : {2, 3}) CHECK(exact_cluster(small, k).diameter.value == oracle::exhaustive_optimum(small, k));
  // The 12-region splits into three clusters of squared diameter exactly 1.
  const Clustering c = exact_cluster(single_region_instance(12).to_pointset(), 3);
  CHECK(compare(c.diameter.value.surd_value(), Rational(1)) == std::strong_ordering::equal);
}

TEST_CASE("exact clustering budget") {
  std::mt19937_64 rng(9);
  const Pointset q = oracle::random_bits(40, 16, rng);
  SearchOptions tiny;
  tiny.node_budget = 5;
  CHECK_THROWS_AS(exact_cluster(q, 3, tiny), BudgetExceeded);
}

TEST_CASE("two-clustering") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 14;
    const Pointset q = trial % 2 ? oracle::random_bits(n, 7, rng) : oracle::random_ints(Metric::l1_int, n, 2, rng);
    const Clustering c = two_cluster(q);
    CHECK(c.k == 2);
    CHECK(clustering_diameter(q, c.assignment, 2).value == c.diameter.value);
    if (n <= 12) CHECK(c.diameter.value == oracle::exhaustive_optimum(q, 2));
    CHECK(c.diameter.value == exact_cluster(q, 2).diameter.value);
  }
  // Antipodal pairs must be split.
  Pointset anti(Metric::hamming, 4);
  for (const char* w : {"0000", "1111", "0011", "1100"}) anti.add(BitVector::from_string(w));
  const Clustering c = two_cluster(anti);
  CHECK(c.assignment[0] != c.assignment[1]);
  CHECK(c.assignment[2] != c.assignment[3]);
  CHECK(c.diameter.value == Distance::integer(2));
}

TEST_CASE("smallest enclosing balls") {
  const auto segment = min_enclosing_ball(rational_points({{0, 0}, {1, 0}}));
  CHECK(segment.radius_sq == Rational(1, 4));
  CHECK(segment.center == std::vector<Rational>{Rational(1, 2), 0});

  const auto triangle = min_enclosing_ball(rational_points({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(triangle.center == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(triangle.radius_sq == Rational(1, 2));

  // An obtuse triangle is enclosed by its longest side.
  const auto obtuse = min_enclosing_ball(rational_points({{0, 0}, {4, 0}, {2, 1}}));
  CHECK(obtuse.radius_sq == 4);
  CHECK(min_enclosing_ball(rational_points({{3, 3}})).radius_sq == 0);

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = 1 + trial % 3, count = 1 + trial % 9;
    std::vector<std::vector<int>> raw(count, std::vector<int>(dim));
    for (auto& pt : raw)
      for (auto& x : pt) x = coord(rng);
    const auto pts = rational_points(raw);
    const auto ball = min_enclosing_ball(pts);
    // Contains every point, support points lie on the boundary.
    for (const auto& pt : pts) CHECK(sq_dist(pt, ball.center) <= ball.radius_sq);
    for (std::size_t s : ball.support) CHECK(sq_dist(pts[s], ball.center) == ball.radius_sq);
    const Rational diam = squared_diameter(pts);
    CHECK(jung_bound_holds(ball.radius_sq, diam, dim));
    CHECK(4 * ball.radius_sq >= diam);
    const auto approx = min_enclosing_ball(std::vector<std::vector<long double>>(
        [&] {
          std::vector<std::vector<long double>> out;
          for (const auto& pt : raw) out.emplace_back(pt.begin(), pt.end());
          return out;
        }()));
    CHECK(static_cast<double>(approx.radius_sq) == doctest::Approx(ball.radius_sq.convert_to<double>()));
  }
  CHECK(jung_bound_holds(Rational(1, 3), Rational(1), 2));
  CHECK_FALSE(jung_bound_holds(Rational(1, 2), Rational(1), 2));
  CHECK(jung_bound_holds(0, 0, 0));
}

TEST_CASE("enclosing balls of cube vertices") {
  std::mt19937_64 rng(17);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 6 + trial % 7, count = 4 + (trial * 7) % 27;
    std::vector<std::vector<int>> raw(count, std::vector<int>(dim));
    for (auto& pt : raw)
      for (auto& x : pt) x = bit(rng);
    const auto pts = rational_points(raw);
    const auto ball = min_enclosing_ball(pts);
    for (const auto& pt : pts) CHECK(sq_dist(pt, ball.center) <= ball.radius_sq);
    for (std::size_t s : ball.support) CHECK(sq_dist(pts[s], ball.center) == ball.radius_sq);
    CHECK(jung_bound_holds(ball.radius_sq, squared_diameter(pts), dim));
    std::vector<std::vector<long double>> approx_pts;
    for (const auto& pt : raw) approx_pts.emplace_back(pt.begin(), pt.end());
    const auto approx = min_enclosing_ball(approx_pts);
    CHECK(static_cast<double>(approx.radius_sq) == doctest::Approx(ball.radius_sq.convert_to<double>()));
  }
  // The full cube: center at 1/2 everywhere.
  std::vector<std::vector<int>> cube;
  for (int m = 0; m < 1 << 5; ++m) {
    cube.emplace_back();
    for (int b = 0; b < 5; ++b) cube.back().push_back((m >> b) & 1);
  }
  const auto ball = min_enclosing_ball(rational_points(cube));
  CHECK(ball.radius_sq == Rational(5, 4));
  for (const Rational& x : ball.center) CHECK(x == Rational(1, 2));
}

TEST_CASE("barrier diagnostic") {
  Pointset anti(Metric::hamming, 4);
  for (const char* w : {"0000", "1111", "0011", "1100"}) anti.add(BitVector::from_string(w));
  const BarrierReport r = barrier_screen(anti, 2, Rational(1));
  CHECK(r.delta == Distance::integer(2));
  CHECK(r.pointset_diameter == Distance::integer(4));
  CHECK(r.gamma_edges == 2);
  CHECK_FALSE(r.gamma_odd_girth);
  CHECK(r.regime == "bipartite far-pair graph, no odd-cycle obstruction");
  REQUIRE(r.jung_holds);
  CHECK(*r.jung_holds);
  CHECK_THROWS(barrier_screen(anti, 2, Rational(1, 2)));

  const BarrierReport none = barrier_screen(anti, 2, Rational(2));
  CHECK(none.gamma_edges == 0);
  CHECK(none.regime == "empty far-pair graph");

  const BarrierReport sphere = barrier_screen(single_region_instance(4).to_pointset(), 3, Rational(1));
  REQUIRE(sphere.ball_diameter_ratio);
  CHECK(*sphere.ball_diameter_ratio > 1.0);
  CHECK(*sphere.ball_diameter_ratio < 1.5);

  // Stitched composite of K4 just below 3/2: the far pairs are the edges.
  const GadgetH h = build_gadget_H();
  const Graph j = named::complete(4);
  const Hypergraph g = incidence_hypergraph(j);
  const CompositeGraph c = build_composite(g, h, oriented_roles(g, j));
  const StitchedEmbedding st = stitch_embedding(c, j, gadget_library(h));
  Pointset image(Metric::hamming, 2 * st.q);
  for (const Point& pt : st.embedding.image) image.add(pt);
  const BarrierReport k4 = barrier_screen(image, 3, Rational(149, 100));
  CHECK(k4.delta == Distance::integer(st.q));
  REQUIRE(k4.gamma_odd_girth);
  CHECK(*k4.gamma_odd_girth % 2 == 1);
  CHECK(k4.regime.rfind("odd cycle of length", 0) == 0);

  // Canonical (sorted) order once sent the exact ball search into a very
  // long recursion.
  const Pointset sorted = pointset_from_json(pointset_to_json(image));
  const BarrierReport k4_sorted = barrier_screen(sorted, 3, Rational(149, 100));
  CHECK(k4_sorted.gamma_edges == k4.gamma_edges);
  CHECK(k4_sorted.jung_holds == k4.jung_holds);
  REQUIRE(k4_sorted.ball_diameter_ratio);
  CHECK(*k4_sorted.ball_diameter_ratio == doctest::Approx(*k4.ball_diameter_ratio));
}

TEST_CASE("clustering JSON") {
  const Pointset p = line(4);
  const Json j = clustering_to_json(p, exact_cluster(p, 2));
  CHECK(j["k"] == 2);
  CHECK(j["assignment"].size() == 4);
  CHECK(j["diameter"]["value"] == "1");
}
