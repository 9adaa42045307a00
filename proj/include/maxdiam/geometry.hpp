#pragma once

// Exact point types for Hamming, integer l1/l-infinity and the spherical
// lattice construction, plus the exact distance predicates built on them.
//
// No accept/reject decision in this header goes through floating point.
// Hamming distance and l1 distance on {0,1}^q coincide, so one metric tag
// covers both.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace maxdiam {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "p" or a finite decimal such as "1.304" into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
int sign(const BigInt& x);
int sign(const Rational& x);

class BitVector {
 public:
  explicit BitVector(std::size_t length);
  static BitVector from_string(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value; }

  BitVector complement() const;
  BitVector concat(const BitVector& tail) const;
  std::size_t popcount() const { return bits_.count(); }
  /// Index 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVector& a, const BitVector& b) { return a.bits_ == b.bits_; }
  friend std::size_t hamming_distance(const BitVector& u, const BitVector& v);

 private:
  boost::dynamic_bitset<> bits_;
};

std::size_t hamming_distance(const BitVector& u, const BitVector& v);

struct IntVector {
  std::vector<std::int64_t> entries;

  IntVector() = default;
  explicit IntVector(std::vector<std::int64_t> values);
  std::size_t dimension() const { return entries.size(); }
  friend bool operator==(const IntVector&, const IntVector&) = default;
};

BigInt l1_distance(const IntVector& u, const IntVector& v);
BigInt linf_distance(const IntVector& u, const IntVector& v);

/// Squared Euclidean distance between two points of the sphere of radius
/// sqrt(2)/2 in closed form 1 - m / sqrt(n1 * n2), where m is the inner
/// product and n1, n2 the squared norms of the unnormalised integer vectors.
struct SurdSqDistance {
  BigInt m;
  BigInt n1;
  BigInt n2;

  BigInt radicand() const { return n1 * n2; }
  double approx() const;
  std::string to_string() const;
};

/// Sign of (c * sqrt(radicand) - m). radicand must be nonnegative.
int compare_scaled_root(const Rational& c, const BigInt& radicand, const BigInt& m);

/// Exact three-way comparison of two surd squared distances.
std::strong_ordering compare(const SurdSqDistance& a, const SurdSqDistance& b);
/// Exact three-way comparison of a surd squared distance against a rational.
std::strong_ordering compare(const SurdSqDistance& a, const Rational& t_sq);
/// Exact test of d <= 1 + sqrt(2)/2.
bool at_most_one_plus_half_sqrt2(const SurdSqDistance& d);

/// A point of the lattice discretisation of one orthant region of the sphere
/// of radius sqrt(2)/2 spanned by three coordinate axes. The unnormalised
/// vector has +coeff on the positive axis and -coeff on the other two.
struct SphereLatticePoint {
  std::array<std::uint32_t, 3> axes{};
  std::uint32_t positive_axis = 0;
  std::array<std::uint32_t, 3> coeffs{};
  std::uint32_t kappa = 0;

  SphereLatticePoint() = default;
  SphereLatticePoint(std::array<std::uint32_t, 3> axes, std::uint32_t positive_axis,
                     std::array<std::uint32_t, 3> coeffs, std::uint32_t kappa);

  /// Nonzero entries of the unnormalised vector, sorted by axis.
  std::vector<std::pair<std::uint32_t, std::int64_t>> signed_support() const;
  BigInt norm_sq() const;
  /// Representation-independent identity: the same geometric point built from
  /// different (axes, positive_axis) triples yields the same key.
  std::string key() const;
  /// Approximate coordinate on an axis, for diagnostics only.
  double approx_coordinate(std::uint32_t axis) const;
};

BigInt inner_product(const SphereLatticePoint& p, const SphereLatticePoint& s);
SurdSqDistance sphere_point_sq_distance(const SphereLatticePoint& p, const SphereLatticePoint& s);
/// Decides |p - s|^2 > t_sq exactly.
bool sq_distance_exceeds(const SphereLatticePoint& p, const SphereLatticePoint& s, const Rational& t_sq);

enum class Metric { hamming, l1_int, linf_int, l2_sphere_lattice };

std::string to_string(Metric m);
Metric metric_from_string(std::string_view name);

/// Exact distance between two points of a pointset. Integer metrics carry the
/// distance itself; the sphere metric carries the squared distance.
class Distance {
 public:
  static Distance integer(BigInt value);
  static Distance surd(SurdSqDistance value);

  bool is_surd() const { return surd_.has_value(); }
  const BigInt& integer_value() const;
  const SurdSqDistance& surd_value() const;
  double approx() const;
  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Distance& a, const Distance& b);
  friend bool operator==(const Distance& a, const Distance& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  BigInt int_value_;
  std::optional<SurdSqDistance> surd_;
};

using Point = std::variant<BitVector, IntVector, SphereLatticePoint>;

class Pointset {
 public:
  Pointset(Metric metric, std::size_t dim);

  Metric metric() const { return metric_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  void add(Point p, std::string label = {});
  const Point& point(std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  /// Empty when the pointset is unlabelled.
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(std::string_view label) const;

  Distance distance(std::size_t i, std::size_t j) const;

 private:
  Metric metric_;
  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

struct DiameterWitness {
  Distance value;
  std::size_t first = 0;
  std::size_t second = 0;
};

/// Maximum pairwise distance (squared for the sphere metric).
DiameterWitness pointset_diameter(const Pointset& points);
/// Diameter of a subset of points given by index.
DiameterWitness subset_diameter(const Pointset& points, const std::vector<std::size_t>& members);

}  // namespace maxdiam
