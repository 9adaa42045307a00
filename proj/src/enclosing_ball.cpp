#include <cmath>
#include <list>
#include <optional>
#include <type_traits>

#include "maxdiam/clustering.hpp"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/simplex.hpp"

namespace maxdiam {

namespace {

template <class T>
T sq_norm_diff(const std::vector<T>& a, const std::vector<T>& b) {
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

template <class T>
bool inside(const BallCertificate<T>& ball, const std::vector<T>& p) {
  const T d = sq_norm_diff(ball.center, p);
  if constexpr (std::is_floating_point_v<T>)
    return d <= ball.radius_sq * (1 + 1e-12L) + 1e-15L;
  else
    return d <= ball.radius_sq;
}

template <class T>
bool is_zero(const T& x) {
  if constexpr (std::is_floating_point_v<T>)
    return std::fabs(x) < 1e-13L;
  else
    return x == 0;
}

// Solves a x = b by Gauss-Jordan elimination; free variables are set to 0.
// Inconsistent rows are ignored, which only happens for degenerate floating
// inputs.
template <class T>
std::vector<T> solve(std::vector<std::vector<T>> a, std::vector<T> b) {
  const std::size_t n = b.size();
  std::vector<int> pivot_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t best = row;
    for (std::size_t r = row; r < n; ++r) {
      if constexpr (std::is_floating_point_v<T>) {
        if (std::fabs(a[r][col]) > std::fabs(a[best][col])) best = r;
      } else if (a[r][col] != 0) {
        best = r;
        break;
      }
    }
    if (is_zero(a[best][col])) continue;
    std::swap(a[row], a[best]);
    std::swap(b[row], b[best]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      const T f = a[r][col] / a[row][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col[row++] = static_cast<int>(col);
  }
  std::vector<T> x(n, T{});
  for (std::size_t r = 0; r < row; ++r) x[pivot_col[r]] = b[r] / a[r][pivot_col[r]];
  return x;
}

// Smallest ball with every point of `boundary` on its surface: its center is
// the circumcenter in their affine hull.
template <class T>
BallCertificate<T> ball_through(const std::vector<const std::vector<T>*>& boundary, std::size_t dim) {
  BallCertificate<T> ball;
  if (boundary.empty()) {
    ball.center.assign(dim, T{});
    ball.radius_sq = T(-1);
    return ball;
  }
  const std::vector<T>& p0 = *boundary[0];
  const std::size_t m = boundary.size() - 1;
  std::vector<std::vector<T>> diff(m, std::vector<T>(dim));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < dim; ++c) diff[i][c] = (*boundary[i + 1])[c] - p0[c];
  std::vector<std::vector<T>> gram(m, std::vector<T>(m));
  std::vector<T> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      T s{};
      for (std::size_t c = 0; c < dim; ++c) s += diff[i][c] * diff[j][c];
      gram[i][j] = s;
    }
    rhs[i] = gram[i][i] / 2;
  }
  const std::vector<T> lambda = solve(gram, rhs);
  ball.center = p0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c < dim; ++c) ball.center[c] += lambda[i] * diff[i][c];
  ball.radius_sq = sq_norm_diff(ball.center, p0);
  return ball;
}

template <class T>
struct MoveToFront {
  using Iter = typename std::list<std::size_t>::iterator;
  const std::vector<std::vector<T>>& points;
  std::size_t dim;
  std::list<std::size_t> order;
  std::vector<std::size_t> support;

  BallCertificate<T> run(Iter end) {
    std::vector<const std::vector<T>*> boundary;
    for (std::size_t s : support) boundary.push_back(&points[s]);
    BallCertificate<T> ball = ball_through(boundary, dim);
    ball.support = support;
    if (support.size() == dim + 1) return ball;
    for (Iter it = order.begin(); it != end;) {
      Iter next = std::next(it);
      const std::size_t i = *it;
      if (ball.radius_sq < T{} || !inside(ball, points[i])) {
        support.push_back(i);
        ball = run(it);
        support.pop_back();
        order.splice(order.begin(), order, it);
      }
      it = next;
    }
    return ball;
  }
};

// Approximate dual weights by Frank-Wolfe with away steps; lambda sums to 1
// and sum lambda_i p_i is the approximate center.
std::vector<long double> approximate_weights(const std::vector<std::vector<long double>>& pts) {
  const std::size_t n = pts.size(), dim = pts[0].size();
  std::vector<long double> lambda(n, 0), center(dim), dist(n);
  auto farthest_from = [&](const std::vector<long double>& x) {
    std::size_t best = 0;
    long double best_d = -1;
    for (std::size_t i = 0; i < n; ++i) {
      const long double d = sq_norm_diff(pts[i], x);
      if (d > best_d) best_d = d, best = i;
    }
    return best;
  };
  const std::size_t a = farthest_from(pts[0]), b = farthest_from(pts[a]);
  lambda[a] += 0.5L;
  lambda[b] += 0.5L;
  for (int iter = 0; iter < 200000; ++iter) {
    std::fill(center.begin(), center.end(), 0.0L);
    for (std::size_t i = 0; i < n; ++i)
      if (lambda[i] > 0)
        for (std::size_t c = 0; c < dim; ++c) center[c] += lambda[i] * pts[i][c];
    long double gamma = 0;
    std::size_t far = 0, near = n;
    for (std::size_t i = 0; i < n; ++i) {
      dist[i] = sq_norm_diff(pts[i], center);
      gamma += lambda[i] * dist[i];
      if (dist[i] > dist[far]) far = i;
      if (lambda[i] > 0 && (near == n || dist[i] < dist[near])) near = i;
    }
    if (gamma <= 0) break;
    const long double up = dist[far] / gamma - 1, down = 1 - dist[near] / gamma;
    if (up <= 1e-15L && down <= 1e-15L) break;
    if (up >= down) {
      const long double step = up / (2 * (1 + up));
      for (auto& l : lambda) l *= 1 - step;
      lambda[far] += step;
    } else {
      const long double step = std::min(down / (2 * (1 - down)), lambda[near] / (1 - lambda[near]));
      for (auto& l : lambda) l *= 1 + step;
      lambda[near] -= step;
      if (lambda[near] < 1e-18L) lambda[near] = 0;
    }
  }
  return lambda;
}

// True when center is a convex combination of the given points, decided by an
// exact feasibility program. Gives up (false) when the coordinates do not
// scale to machine integers.
bool in_convex_hull(const std::vector<std::vector<Rational>>& points, const std::vector<std::size_t>& subset,
                    const std::vector<Rational>& center) {
  const std::size_t dim = center.size();
  LinearProgram lp(subset.size());
  lp.add_row([&] {
    std::vector<std::pair<std::size_t, std::int64_t>> row;
    for (std::size_t v = 0; v < subset.size(); ++v) row.emplace_back(v, 1);
    return row;
  }(), RowSense::equal, 1);
  const BigInt limit = BigInt(1) << 40;
  for (std::size_t c = 0; c < dim; ++c) {
    BigInt scale = 1;
    for (std::size_t i : subset) scale = boost::multiprecision::lcm(scale, denominator(points[i][c]));
    std::vector<std::pair<std::size_t, std::int64_t>> row;
    for (std::size_t v = 0; v < subset.size(); ++v) {
      const BigInt entry = numerator(points[subset[v]][c]) * (scale / denominator(points[subset[v]][c]));
      if (abs(entry) > limit) return false;
      if (entry != 0) row.emplace_back(v, entry.convert_to<std::int64_t>());
    }
    lp.add_row(row, RowSense::equal, center[c] * Rational(scale));
  }
  return solve_lp(lp).status == LpStatus::optimal;
}

// A ball is the smallest enclosing one when it contains every point and its
// center lies in the convex hull of the points on its boundary. Candidate
// boundaries come from a floating solve; every check is exact.
std::optional<BallCertificate<Rational>> certified_ball(const std::vector<std::vector<Rational>>& points) {
  const std::size_t n = points.size(), dim = points[0].size();
  std::vector<std::vector<long double>> approx(n, std::vector<long double>(dim));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < dim; ++c) approx[i][c] = points[i][c].convert_to<long double>();
  const std::vector<long double> lambda = approximate_weights(approx);
  std::vector<long double> center(dim, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < dim; ++c) center[c] += lambda[i] * approx[i][c];
  std::vector<long double> dist(n);
  long double r_sq = 0;
  for (std::size_t i = 0; i < n; ++i) r_sq = std::max(r_sq, dist[i] = sq_norm_diff(approx[i], center));

  std::vector<std::vector<std::size_t>> candidates;
  for (long double tol : {1e-12L, 1e-9L, 1e-6L}) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (dist[i] >= r_sq * (1 - tol)) s.push_back(i);
    candidates.push_back(s);
  }
  std::vector<std::size_t> weighted;
  for (std::size_t i = 0; i < n; ++i)
    if (lambda[i] > 1e-9L) weighted.push_back(i);
  candidates.push_back(weighted);

  for (const auto& s : candidates) {
    if (s.empty()) continue;
    std::vector<const std::vector<Rational>*> boundary;
    for (std::size_t i : s) boundary.push_back(&points[i]);
    BallCertificate<Rational> ball = ball_through(boundary, dim);
    bool ok = true;
    for (std::size_t i : s) ok = ok && sq_norm_diff(ball.center, points[i]) == ball.radius_sq;
    for (std::size_t i = 0; ok && i < n; ++i) ok = inside(ball, points[i]);
    if (!ok || !in_convex_hull(points, s, ball.center)) continue;
    ball.support = s;
    return ball;
  }
  return std::nullopt;
}

}  // namespace

template <class T>
BallCertificate<T> min_enclosing_ball(const std::vector<std::vector<T>>& points) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_ball: no points");
  const std::size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch("min_enclosing_ball: points differ in dimension");
  if constexpr (std::is_same_v<T, Rational>) {
    if (points.size() > dim + 1 || dim > 8)
      if (auto ball = certified_ball(points)) return *ball;
  }
  MoveToFront<T> mtf{points, dim, {}, {}};
  for (std::size_t i = 0; i < points.size(); ++i) mtf.order.push_back(i);
  return mtf.run(mtf.order.end());
}

template BallCertificate<Rational> min_enclosing_ball(const std::vector<std::vector<Rational>>&);
template BallCertificate<long double> min_enclosing_ball(const std::vector<std::vector<long double>>&);

Rational squared_diameter(const std::vector<std::vector<Rational>>& points) {
  Rational best = 0;
  for (std::size_t a = 0; a < points.size(); ++a)
    for (std::size_t b = a + 1; b < points.size(); ++b) best = std::max(best, sq_norm_diff(points[a], points[b]));
  return best;
}

bool jung_bound_holds(const Rational& radius_sq, const Rational& diam_sq, std::size_t dimension) {
  if (dimension == 0) return radius_sq == 0;
  return radius_sq * 2 * (dimension + 1) <= diam_sq * dimension;
}

BarrierReport barrier_screen(const Pointset& p, int k, const Rational& ratio, const SearchOptions& options) {
  if (ratio < 1) throw std::invalid_argument("barrier_screen: ratio must be at least 1");
  BarrierReport r{exact_cluster(p, k, options).diameter.value, pointset_diameter(p).value, {}, {}, ratio, 0, {}, {}};
  const std::size_t n = p.size();
  const bool sphere = p.metric() == Metric::l2_sphere_lattice;
  // Euclidean delta: Hamming distance is the squared l2 distance of 0/1 points.
  const double delta_l2 = std::sqrt(r.delta.approx());

  if (p.metric() == Metric::hamming) {
    std::vector<std::vector<Rational>> coords(n, std::vector<Rational>(p.dim()));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < p.dim(); ++c) coords[i][c] = std::get<BitVector>(p.point(i))[c] ? 1 : 0;
    const auto ball = min_enclosing_ball(coords);
    r.jung_holds = jung_bound_holds(ball.radius_sq, squared_diameter(coords), p.dim());
    if (delta_l2 > 0) r.ball_diameter_ratio = 2 * std::sqrt(ball.radius_sq.convert_to<double>()) / delta_l2;
  } else if (sphere) {
    std::vector<std::vector<long double>> coords(n, std::vector<long double>(p.dim()));
    for (std::size_t i = 0; i < n; ++i)
      for (auto& [axis, c] : std::get<SphereLatticePoint>(p.point(i)).signed_support()) {
        (void)c;
        coords[i][axis] = std::get<SphereLatticePoint>(p.point(i)).approx_coordinate(axis);
      }
    const auto ball = min_enclosing_ball(coords);
    const long double diam_sq = r.pointset_diameter.approx();
    const long double dim = static_cast<long double>(p.dim());
    r.jung_holds = ball.radius_sq * 2 * (dim + 1) <= diam_sq * dim * (1 + 1e-12L);
    if (delta_l2 > 0) r.ball_diameter_ratio = 2 * std::sqrt(static_cast<double>(ball.radius_sq)) / delta_l2;
  }

  Graph gamma(n);
  const BigInt num = numerator(ratio), den = denominator(ratio);
  const long double ratio_sq = ratio.convert_to<long double>() * ratio.convert_to<long double>();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const Distance d = p.distance(a, b);
      const bool far = sphere ? static_cast<long double>(d.approx()) > ratio_sq * r.delta.approx() * (1 + 1e-12L)
                              : d.integer_value() * den > r.delta.integer_value() * num;
      if (far) gamma.add_edge(a, b);
    }
  r.gamma_edges = gamma.edge_count();
  r.gamma_odd_girth = odd_girth(gamma);
  if (r.gamma_edges == 0)
    r.regime = "empty far-pair graph";
  else if (!r.gamma_odd_girth)
    r.regime = "bipartite far-pair graph, no odd-cycle obstruction";
  else
    r.regime = "odd cycle of length " + std::to_string(*r.gamma_odd_girth) + " among far pairs";
  return r;
}

}  // namespace maxdiam
