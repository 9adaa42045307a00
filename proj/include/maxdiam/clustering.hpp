#pragma once

// Max-k-Diameter clustering: Gonzalez farthest-point seeding, the exact
// optimum through k-colorability of threshold graphs, the polynomial k = 2
// case, smallest enclosing balls and the Jung-ratio diagnostic.

#include <optional>
#include <string>
#include <vector>

#include "maxdiam/coloring.hpp"
#include "maxdiam/geometry.hpp"
#include "maxdiam/graph.hpp"
#include "maxdiam/io.hpp"

namespace maxdiam {

struct Clustering {
  int k = 0;
  /// Cluster id in [0, k) per point; clusters may be empty.
  std::vector<int> assignment;
  /// Largest intra-cluster distance (squared for the sphere metric), with the
  /// pair attaining it.
  DiameterWitness diameter;
};

/// Recomputes the diameter of a clustering from scratch.
DiameterWitness clustering_diameter(const Pointset& p, const std::vector<int>& assignment, int k);

/// Farthest-point seeding from point 0 (ties to the lowest index), then each
/// point joins its nearest seed (ties to the earliest seed).
Clustering gonzalez_cluster(const Pointset& p, int k);

/// Graph on the points with an edge for every pair strictly farther apart
/// than d.
Graph threshold_graph(const Pointset& p, const Distance& d);

inline constexpr std::size_t kExactClusterMaxPoints = 400;

/// Optimal k-clustering for k <= 4: binary search over the sorted distinct
/// pairwise distances for the least d whose threshold graph is k-colorable.
/// Throws BudgetExceeded when a colorability check runs out of nodes.
Clustering exact_cluster(const Pointset& p, int k, const SearchOptions& options = {},
                         std::size_t max_points = kExactClusterMaxPoints);

/// Optimal 2-clustering through bipartiteness of threshold graphs.
Clustering two_cluster(const Pointset& p);

template <class T>
struct BallCertificate {
  std::vector<T> center;
  T radius_sq{};
  /// Points on the boundary that determine the ball.
  std::vector<std::size_t> support;
};

/// Smallest enclosing ball by move-to-front recursion on support sets.
/// Works exactly over Rational; long double is accepted for irrational inputs.
template <class T>
BallCertificate<T> min_enclosing_ball(const std::vector<std::vector<T>>& points);

extern template BallCertificate<Rational> min_enclosing_ball(const std::vector<std::vector<Rational>>&);
extern template BallCertificate<long double> min_enclosing_ball(const std::vector<std::vector<long double>>&);

/// Squared Euclidean diameter of a rational point cloud.
Rational squared_diameter(const std::vector<std::vector<Rational>>& points);

/// radius^2 <= diam^2 * n / (2 (n + 1)) with n the ambient dimension.
bool jung_bound_holds(const Rational& radius_sq, const Rational& diam_sq, std::size_t dimension);

struct BarrierReport {
  /// Optimal k-clustering diameter (squared for sphere points).
  Distance delta;
  /// Diameter of the pointset itself.
  Distance pointset_diameter;
  /// Enclosing-ball diameter divided by delta, in l2; only for Hamming and
  /// sphere pointsets.
  std::optional<double> ball_diameter_ratio;
  std::optional<bool> jung_holds;
  Rational ratio;
  std::size_t gamma_edges = 0;
  std::optional<std::size_t> gamma_odd_girth;
  std::string regime;
};

/// Diagnostic for the Euclidean approximation barrier: optimal diameter,
/// enclosing-ball ratio and odd girth of the graph joining pairs farther than
/// ratio * delta. Sphere pointsets are screened in long double for the
/// threshold step; everything else is exact.
BarrierReport barrier_screen(const Pointset& p, int k, const Rational& ratio, const SearchOptions& options = {});

Json clustering_to_json(const Pointset& p, const Clustering& c);

}  // namespace maxdiam
