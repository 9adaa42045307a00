#include <boost/multiprecision/cpp_dec_float.hpp>
#include <set>

#include "doctest.h"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/sphere.hpp"

using namespace maxdiam;
using Float50 = boost::multiprecision::cpp_dec_float_50;

namespace {

Float50 float_sq_distance(const SphereLatticePoint& p, const SphereLatticePoint& s) {
  Float50 dot = 0;
  for (auto& [a, x] : p.signed_support())
    for (auto& [b, y] : s.signed_support())
      if (a == b) dot += Float50(x) * Float50(y);
  return 1 - dot / (sqrt(Float50(p.norm_sq().str())) * sqrt(Float50(s.norm_sq().str())));
}

Float50 to_float(const Rational& r) { return Float50(numerator(r).str()) / Float50(denominator(r).str()); }

const SphereInstance& region12() {
  static const SphereInstance inst = single_region_instance(12);
  return inst;
}

// Largest squared distance inside each cluster, in 50-digit arithmetic.
std::vector<Float50> float_cluster_diameters(const SphereInstance& inst, const Assignment& a, int k) {
  std::vector<Float50> out(k, 0);
  for (std::size_t x = 0; x < inst.points.size(); ++x)
    for (std::size_t y = x + 1; y < inst.points.size(); ++y)
      if (a[x] == a[y]) out[a[x]] = std::max(out[a[x]], float_sq_distance(inst.points[x], inst.points[y]));
  return out;
}

}  // namespace

TEST_CASE("region sizes") {
  for (std::uint32_t kappa = 1; kappa <= 14; ++kappa) {
    const std::size_t per_family = (kappa + 1) * (kappa + 2) / 2;
    CHECK(region_points({0, 1, 2}, kappa).size() == 3 * per_family - 3);
    CHECK(single_region_instance(kappa).points.size() == 3 * per_family - 3);
  }
  CHECK(region12().points.size() == 270);
  CHECK_THROWS(single_region_instance(0));
}

TEST_CASE("region membership and anchors") {
  const SphereInstance& inst = region12();
  std::set<std::string> keys;
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const auto& p = inst.points[i];
    CHECK(keys.insert(p.key()).second);
    CHECK(inst.index_of(p) == i);
    const bool covered = in_region(p, {0, 1, 2}, 0) || in_region(p, {0, 1, 2}, 1) || in_region(p, {0, 1, 2}, 2);
    CHECK(covered);
  }
  for (std::uint32_t v = 0; v < 3; ++v) {
    const auto& e = inst.points[inst.anchor(v)];
    CHECK(e.signed_support() == std::vector<std::pair<std::uint32_t, std::int64_t>>{{v, 12}});
    const auto& minus = inst.points[inst.anti_anchor(v)];
    CHECK(minus.signed_support() == std::vector<std::pair<std::uint32_t, std::int64_t>>{{v, -12}});
    CHECK(in_region(e, {0, 1, 2}, v));
  }
  CHECK_THROWS(inst.anchor(5));
}

TEST_CASE("threshold graph agrees with 50-digit evaluation") {
  const SphereInstance& inst = region12();
  const Rational t_sq = lemma53_threshold_sq();
  CHECK(t_sq == Rational(163 * 163, 125 * 125));
  const ThresholdGraph tg = build_threshold_graph(inst, t_sq);
  std::size_t expected = 0;
  const Float50 t = to_float(t_sq);
  for (std::size_t a = 0; a < inst.points.size(); ++a)
    for (std::size_t b = a + 1; b < inst.points.size(); ++b) {
      const bool far = float_sq_distance(inst.points[a], inst.points[b]) > t;
      expected += far;
      REQUIRE(tg.graph.has_edge(Vertex(a), Vertex(b)) == far);
    }
  CHECK(expected == 4650);
  CHECK(tg.graph.edge_count() == 4650);

  // Thread count does not change the edge order.
  const ThresholdGraph parallel = build_threshold_graph(inst, t_sq, 4);
  CHECK(parallel.graph.edges() == tg.graph.edges());
  CHECK_THROWS(build_threshold_graph(inst, Rational(0)));
}

TEST_CASE("anchor separation on the 12-region") {
  const AnchorSeparation s = verify_anchor_separation(region12(), lemma53_threshold_sq());
  CHECK(s.colorable);
  CHECK(s.anchors_forced);
  CHECK(s.holds);
  CHECK_FALSE(s.budget_exceeded);
  CHECK(s.edge_count == 4650);
  REQUIRE(s.witness_coloring);
  const ThresholdGraph tg = build_threshold_graph(region12(), lemma53_threshold_sq());
  CHECK(is_proper_coloring(tg.graph, *s.witness_coloring, 3));

  SearchOptions tiny;
  tiny.node_budget = 10;
  CHECK(verify_anchor_separation(region12(), lemma53_threshold_sq(), tiny).budget_exceeded);
}

TEST_CASE("coarse regions") {
  // At 1.304 the coarse discretisations leave the anchors free; at 6/5 they
  // are forced apart.
  for (std::uint32_t kappa : {2u, 3u, 4u}) {
    const SphereInstance inst = single_region_instance(kappa);
    const Rational loose = lemma53_threshold_sq();
    const AnchorSeparation a = verify_anchor_separation(inst, loose);
    CHECK_FALSE(a.anchors_forced);
    REQUIRE(a.counterexample);
    const ThresholdGraph tg = build_threshold_graph(inst, loose);
    CHECK(is_proper_coloring(tg.graph, *a.counterexample, 3));
    const auto& c = *a.counterexample;
    const bool distinct = c[inst.anchor(0)] != c[inst.anchor(1)] && c[inst.anchor(1)] != c[inst.anchor(2)] &&
                          c[inst.anchor(0)] != c[inst.anchor(2)];
    CHECK_FALSE(distinct);
    CHECK(verify_anchor_separation(inst, Rational(36, 25)).anchors_forced);
  }
}

TEST_CASE("completeness clustering has unit diameter") {
  for (std::uint32_t kappa : {1u, 4u, 12u}) {
    const SphereInstance inst = single_region_instance(kappa);
    const Assignment a = completeness_clustering(inst);
    const ClusterCheck c = check_unit_diameter(inst, a);
    CHECK(c.partition);
    CHECK(c.diameter_at_most_one);
    for (const Float50& d : float_cluster_diameters(inst, a, 3)) CHECK(d <= Float50(1) + Float50("1e-40"));
  }
  // Moving an anti-anchor into the wrong cluster breaks the bound.
  const SphereInstance& inst = region12();
  Assignment a = completeness_clustering(inst);
  a[inst.anti_anchor(1)] = a[inst.anchor(1)];
  CHECK_FALSE(check_unit_diameter(inst, a).diameter_at_most_one);
}

TEST_CASE("minimum-coordinate clustering") {
  const SphereInstance& inst = region12();
  const Assignment a = remark_clustering(inst);
  CHECK(within_remark_bound(inst, a));
  const Float50 bound = 1 + sqrt(Float50(2)) / 2;
  for (const Float50& d : float_cluster_diameters(inst, a, 3)) CHECK(d <= bound);
  const auto diam = cluster_diameters(inst, a);
  REQUIRE(diam.size() == 3);
  for (const auto& d : diam) REQUIRE(d);
  // One cluster holds e_b and e_c, whose squared distance is 1.
  CHECK(check_unit_diameter(inst, a).partition);
}

TEST_CASE("instances over hypergraphs") {
  const Graph j = named::complete(4);
  const Hypergraph g = incidence_hypergraph(j);
  const SphereInstance inst = build_P_G(g, 4);
  CHECK(inst.regions.size() == 4);
  CHECK(inst.axis_count == 6);
  std::set<std::string> keys;
  for (const auto& p : inst.points) CHECK(keys.insert(p.key()).second);
  CHECK(inst.provenance.size() == inst.points.size());

  const ColoringSearchResult rainbow = rainbow_first(g, 3);
  REQUIRE(rainbow.status == SearchStatus::found);
  const Assignment a = coloring_to_clustering(inst, g, rainbow.coloring);
  const ClusterCheck c = check_unit_diameter(inst, a);
  CHECK(c.partition);
  CHECK(c.diameter_at_most_one);

  Coloring bad = rainbow.coloring;
  bad[0] = bad[1];
  CHECK_THROWS(coloring_to_clustering(inst, g, bad));
  Hypergraph two(2);
  two.add_hyperedge({0, 1});
  CHECK_THROWS(build_P_G(two));
}

TEST_CASE("kappa sweep") {
  const SweepReport r = kappa_sweep({2, 3}, {Rational(163, 125), Rational(6, 5)});
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].kappa == 2);
  CHECK(r.rows[0].t == Rational(6, 5));
  CHECK(r.rows[0].anchors_forced);
  CHECK_FALSE(r.rows[1].anchors_forced);
  CHECK(r.monotonicity_violations.empty());
  const std::string csv = r.to_csv();
  CHECK(csv.rfind("kappa,t_num,t_den,separation_holds,nodes_explored,seconds\n", 0) == 0);
  CHECK(csv.find("\n2,6,5,true,") != std::string::npos);
  CHECK(csv.find("\n3,163,125,false,") != std::string::npos);
}
