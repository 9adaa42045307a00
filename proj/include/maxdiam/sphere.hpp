#pragma once

// Lattice pointsets on the sphere of radius sqrt(2)/2: one region per
// 3-element hyperedge, the exact threshold graph, the machine check that
// every proper 3-coloring separates the three anchor points e_a, e_b, e_c,
// and the explicit clusterings used by the completeness arguments.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxdiam/coloring.hpp"
#include "maxdiam/geometry.hpp"
#include "maxdiam/graph.hpp"

namespace maxdiam {

using Axes = std::array<std::uint32_t, 3>;

/// 1.304 squared, the soundness threshold of the single-region check.
Rational lemma53_threshold_sq();

/// All points of the three sign families of one region, deduplicated at the
/// shared axis points: 3 * C(kappa + 2, 2) - 3 points.
std::vector<SphereLatticePoint> region_points(const Axes& axes, std::uint32_t kappa);

/// Closed orthant region S^v of `axes`: x_v >= 0, the other two axes <= 0,
/// and no support outside `axes`.
bool in_region(const SphereLatticePoint& p, const Axes& axes, std::uint32_t v);

struct SphereInstance {
  std::uint32_t kappa = 0;
  std::size_t axis_count = 0;
  std::vector<Axes> regions;
  /// Deduplicated, sorted by canonical key.
  std::vector<SphereLatticePoint> points;
  /// Which (region, family) pairs generated each point, e.g. "r0:f1,r1:f0".
  std::vector<std::string> provenance;

  std::optional<std::size_t> index_of(const SphereLatticePoint& p) const;
  /// Index of e_v, the point with all weight on axis v and positive sign.
  std::size_t anchor(std::uint32_t v) const;
  /// Index of -e_v.
  std::size_t anti_anchor(std::uint32_t v) const;
  Pointset to_pointset() const;
};

SphereInstance single_region_instance(std::uint32_t kappa);
/// Union of kappa-regions over the hyperedges of a 3-uniform hypergraph whose
/// vertices index the coordinate axes.
SphereInstance build_P_G(const Hypergraph& g, std::uint32_t kappa = 12);

struct ThresholdGraph {
  Rational threshold_sq;
  Graph graph;
};

/// Edge between two points iff their distance strictly exceeds t, decided by
/// the exact surd predicate. Evaluation may be split over threads; the edge
/// set and its order do not depend on that.
ThresholdGraph build_threshold_graph(const SphereInstance& inst, const Rational& t_sq, unsigned threads = 1);

struct AnchorSeparation {
  bool colorable = false;
  /// Every proper 3-coloring gives the anchors three distinct colors.
  bool anchors_forced = false;
  /// colorable && anchors_forced.
  bool holds = false;
  bool budget_exceeded = false;
  std::optional<Coloring> witness_coloring;
  std::optional<Coloring> counterexample;
  std::size_t edge_count = 0;
  std::uint64_t nodes = 0;
};

/// Checks the three region anchors of a single-region instance.
AnchorSeparation verify_anchor_separation(const SphereInstance& inst, const Rational& t_sq,
                                          const SearchOptions& options = {});
AnchorSeparation verify_anchor_separation(const SphereInstance& inst, const ThresholdGraph& tg,
                                          const SearchOptions& options = {});

/// Cluster ids 0, 1, 2 per point.
using Assignment = std::vector<int>;

/// (P cap S^a) minus {-e_b}, (P cap S^b) minus {-e_c}, (P cap S^c) minus {-e_a}.
Assignment completeness_clustering(const SphereInstance& inst);

/// Clusters indexed by color: cluster X collects the regions S^v of the
/// vertices v colored X, earlier clusters taking precedence on overlaps.
/// Throws if the coloring is not a proper rainbow 3-coloring.
Assignment coloring_to_clustering(const SphereInstance& inst, const Hypergraph& g, const Coloring& coloring);

/// Minimum-coordinate rule: A = {x_a <= x_b, x_a <= x_c}, then B, then C.
Assignment remark_clustering(const SphereInstance& inst);

struct ClusterCheck {
  bool partition = false;
  bool diameter_at_most_one = false;
  bool nonnegative_inner_products = false;
  std::optional<DiameterWitness> worst;
};

/// Exact per-cluster diameter check against 1.
ClusterCheck check_unit_diameter(const SphereInstance& inst, const Assignment& clusters, int k = 3);
/// Exact check that every cluster has squared diameter <= 1 + sqrt(2)/2.
bool within_remark_bound(const SphereInstance& inst, const Assignment& clusters);
/// Squared diameter of each cluster.
std::vector<std::optional<DiameterWitness>> cluster_diameters(const SphereInstance& inst, const Assignment& clusters,
                                                              int k = 3);

struct SweepRow {
  std::uint32_t kappa = 0;
  Rational t;
  bool separation_holds = false;
  bool anchors_forced = false;
  bool colorable = false;
  bool budget_exceeded = false;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  /// (kappa, t_low, t_high) triples where forcing held at t_high but not at
  /// t_low < t_high.
  std::vector<std::string> monotonicity_violations;

  std::string to_csv() const;
};

SweepReport kappa_sweep(const std::vector<std::uint32_t>& kappas, const std::vector<Rational>& t_grid,
                        const SearchOptions& options = {}, unsigned threads = 1);

}  // namespace maxdiam
