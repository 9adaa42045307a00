#include "maxdiam/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace maxdiam {

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw bad();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw bad();
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw bad();
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
    if (frac.empty()) throw bad();
    BigInt w = parse_int(whole);
    BigInt f = parse_int(frac);
    if (f < 0) throw bad();
    BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
    BigInt magnitude = boost::multiprecision::abs(w) * scale + f;
    return Rational(negative ? BigInt(-magnitude) : magnitude, scale);
  }
  return Rational(parse_int(text));
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

int sign(const BigInt& x) { return x.sign(); }
int sign(const Rational& x) { return x.sign(); }

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::size_t length) : bits_(length) {
  if (length == 0) throw std::invalid_argument("BitVector length must be positive");
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.bits_[i] = true;
    else if (bits[i] != '0')
      throw std::invalid_argument("bit string may only contain 0 and 1");
  }
  return v;
}

BitVector BitVector::complement() const {
  BitVector out = *this;
  out.bits_.flip();
  return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
  BitVector out(size() + tail.size());
  for (std::size_t i = 0; i < size(); ++i) out.bits_[i] = bits_[i];
  for (std::size_t i = 0; i < tail.size(); ++i) out.bits_[size() + i] = tail.bits_[i];
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size(), '0');
  for (std::size_t i = 0; i < size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::size_t hamming_distance(const BitVector& u, const BitVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("hamming_distance: lengths " + std::to_string(u.size()) + " and " +
                            std::to_string(v.size()));
  return (u.bits_ ^ v.bits_).count();
}

// ---------------------------------------------------------------- IntVector

IntVector::IntVector(std::vector<std::int64_t> values) : entries(std::move(values)) {
  if (entries.empty()) throw std::invalid_argument("IntVector dimension must be positive");
}

BigInt l1_distance(const IntVector& u, const IntVector& v) {
  if (u.dimension() != v.dimension()) throw DimensionMismatch("l1_distance: dimension mismatch");
  BigInt total = 0;
  for (std::size_t i = 0; i < u.dimension(); ++i)
    total += boost::multiprecision::abs(BigInt(u.entries[i]) - BigInt(v.entries[i]));
  return total;
}

BigInt linf_distance(const IntVector& u, const IntVector& v) {
  if (u.dimension() != v.dimension()) throw DimensionMismatch("linf_distance: dimension mismatch");
  BigInt best = 0;
  for (std::size_t i = 0; i < u.dimension(); ++i)
    best = std::max(best, BigInt(boost::multiprecision::abs(BigInt(u.entries[i]) - BigInt(v.entries[i]))));
  return best;
}

// ---------------------------------------------------------------- surds

double SurdSqDistance::approx() const {
  return 1.0 - m.convert_to<double>() / std::sqrt(n1.convert_to<double>() * n2.convert_to<double>());
}

std::string SurdSqDistance::to_string() const {
  if (m == 0) return "1";
  const BigInt a = m < 0 ? BigInt(-m) : m;
  return std::string(m < 0 ? "1 + " : "1 - ") + a.str() + "/sqrt(" + n1.str() + "*" + n2.str() + ")";
}

int compare_scaled_root(const Rational& c, const BigInt& radicand, const BigInt& m) {
  if (radicand < 0) throw std::invalid_argument("compare_scaled_root: negative radicand");
  int sa = radicand == 0 ? 0 : sign(c);
  int sb = sign(m);
  if (sa != sb) return sa > sb ? 1 : -1;
  if (sa == 0) return 0;
  Rational lhs = c * c * Rational(radicand);
  Rational rhs = Rational(m * m);
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return sa > 0 ? cmp : -cmp;
}

namespace {

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(const SurdSqDistance& a, const SurdSqDistance& b) {
  // a - b = m_b / sqrt(N_b) - m_a / sqrt(N_a)
  const BigInt na = a.radicand();
  const BigInt nb = b.radicand();
  int sx = sign(b.m);
  int sy = sign(a.m);
  if (sx != sy) return to_ordering(sx > sy ? 1 : -1);
  if (sx == 0) return std::strong_ordering::equal;
  BigInt lhs = b.m * b.m * na;
  BigInt rhs = a.m * a.m * nb;
  int cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
  return to_ordering(sx > 0 ? cmp : -cmp);
}

std::strong_ordering compare(const SurdSqDistance& a, const Rational& t_sq) {
  // 1 - m/sqrt(N) - t = ((1 - t) sqrt(N) - m) / sqrt(N)
  return to_ordering(compare_scaled_root(Rational(1) - t_sq, a.radicand(), a.m));
}

bool at_most_one_plus_half_sqrt2(const SurdSqDistance& d) {
  // 1 - m/sqrt(N) <= 1 + sqrt(2)/2  <=>  m/sqrt(N) >= -sqrt(2)/2
  if (d.m >= 0) return true;
  return 2 * d.m * d.m <= d.radicand();
}

// ---------------------------------------------------------------- sphere lattice

SphereLatticePoint::SphereLatticePoint(std::array<std::uint32_t, 3> axes_, std::uint32_t positive_axis_,
                                       std::array<std::uint32_t, 3> coeffs_, std::uint32_t kappa_)
    : axes(axes_), positive_axis(positive_axis_), coeffs(coeffs_), kappa(kappa_) {
  if (kappa == 0) throw std::invalid_argument("SphereLatticePoint: kappa must be positive");
  if (axes[0] == axes[1] || axes[0] == axes[2] || axes[1] == axes[2])
    throw std::invalid_argument("SphereLatticePoint: axes must be distinct");
  if (std::find(axes.begin(), axes.end(), positive_axis) == axes.end())
    throw std::invalid_argument("SphereLatticePoint: positive axis must be one of the axes");
  if (std::uint64_t(coeffs[0]) + coeffs[1] + coeffs[2] != kappa)
    throw std::invalid_argument("SphereLatticePoint: coefficients must sum to kappa");
}

std::vector<std::pair<std::uint32_t, std::int64_t>> SphereLatticePoint::signed_support() const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (int i = 0; i < 3; ++i) {
    if (coeffs[i] == 0) continue;
    std::int64_t c = coeffs[i];
    out.emplace_back(axes[i], axes[i] == positive_axis ? c : -c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt SphereLatticePoint::norm_sq() const {
  BigInt n = 0;
  for (auto c : coeffs) n += BigInt(c) * c;
  return n;
}

std::string SphereLatticePoint::key() const {
  auto support = signed_support();
  std::int64_t g = 0;
  for (auto& [axis, c] : support) g = std::gcd(g, c < 0 ? -c : c);
  std::string out;
  for (auto& [axis, c] : support) {
    if (!out.empty()) out += ',';
    out += std::to_string(axis) + ':' + std::to_string(c / g);
  }
  return out;
}

double SphereLatticePoint::approx_coordinate(std::uint32_t axis) const {
  double norm = std::sqrt(norm_sq().convert_to<double>());
  for (auto& [a, c] : signed_support())
    if (a == axis) return static_cast<double>(c) / norm * std::sqrt(0.5);
  return 0.0;
}

BigInt inner_product(const SphereLatticePoint& p, const SphereLatticePoint& s) {
  BigInt m = 0;
  auto sp = p.signed_support();
  auto ss = s.signed_support();
  for (auto& [a, c] : sp)
    for (auto& [b, d] : ss)
      if (a == b) m += BigInt(c) * d;
  return m;
}

SurdSqDistance sphere_point_sq_distance(const SphereLatticePoint& p, const SphereLatticePoint& s) {
  return SurdSqDistance{inner_product(p, s), p.norm_sq(), s.norm_sq()};
}

bool sq_distance_exceeds(const SphereLatticePoint& p, const SphereLatticePoint& s, const Rational& t_sq) {
  return compare(sphere_point_sq_distance(p, s), t_sq) == std::strong_ordering::greater;
}

// ---------------------------------------------------------------- metric / distance

std::string to_string(Metric m) {
  switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::l1_int: return "l1_int";
    case Metric::linf_int: return "linf_int";
    case Metric::l2_sphere_lattice: return "l2_sphere_lattice";
  }
  return "unknown";
}

Metric metric_from_string(std::string_view name) {
  if (name == "hamming" || name == "l1_binary") return Metric::hamming;
  if (name == "l1_int") return Metric::l1_int;
  if (name == "linf_int") return Metric::linf_int;
  if (name == "l2_sphere_lattice") return Metric::l2_sphere_lattice;
  throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
}

Distance Distance::integer(BigInt value) {
  Distance d;
  d.int_value_ = std::move(value);
  return d;
}

Distance Distance::surd(SurdSqDistance value) {
  Distance d;
  d.surd_ = std::move(value);
  return d;
}

const BigInt& Distance::integer_value() const {
  if (surd_) throw std::logic_error("Distance: surd value has no integer form");
  return int_value_;
}

const SurdSqDistance& Distance::surd_value() const {
  if (!surd_) throw std::logic_error("Distance: integer value has no surd form");
  return *surd_;
}

double Distance::approx() const { return surd_ ? surd_->approx() : int_value_.convert_to<double>(); }

std::string Distance::to_string() const { return surd_ ? surd_->to_string() : int_value_.str(); }

std::strong_ordering operator<=>(const Distance& a, const Distance& b) {
  if (a.is_surd() != b.is_surd()) throw std::logic_error("Distance: comparing values of different kinds");
  if (a.is_surd()) return compare(*a.surd_, *b.surd_);
  if (a.int_value_ < b.int_value_) return std::strong_ordering::less;
  if (a.int_value_ > b.int_value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- pointset

Pointset::Pointset(Metric metric, std::size_t dim) : metric_(metric), dim_(dim) {}

namespace {

bool matches_metric(Metric m, const Point& p) {
  switch (m) {
    case Metric::hamming: return std::holds_alternative<BitVector>(p);
    case Metric::l1_int:
    case Metric::linf_int: return std::holds_alternative<IntVector>(p);
    case Metric::l2_sphere_lattice: return std::holds_alternative<SphereLatticePoint>(p);
  }
  return false;
}

}  // namespace

void Pointset::add(Point p, std::string label) {
  if (!matches_metric(metric_, p))
    throw std::invalid_argument("Pointset: point type does not match metric " + to_string(metric_));
  if (auto* b = std::get_if<BitVector>(&p); b && b->size() != dim_)
    throw DimensionMismatch("Pointset: bit vector length differs from dim");
  if (auto* v = std::get_if<IntVector>(&p); v && v->dimension() != dim_)
    throw DimensionMismatch("Pointset: integer vector dimension differs from dim");
  if (auto* s = std::get_if<SphereLatticePoint>(&p)) {
    for (auto a : s->axes)
      if (a >= dim_) throw DimensionMismatch("Pointset: sphere axis outside the coordinate universe");
  }
  bool labelled = !labels_.empty() || (points_.empty() && !label.empty());
  if (labelled) {
    if (label.empty()) throw std::invalid_argument("Pointset: labels must be given for every point");
    if (find_label(label)) throw std::invalid_argument("Pointset: duplicate label '" + label + "'");
    labels_.push_back(std::move(label));
  } else if (!label.empty()) {
    throw std::invalid_argument("Pointset: cannot label a point of an unlabelled pointset");
  }
  points_.push_back(std::move(p));
}

std::optional<std::size_t> Pointset::find_label(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

Distance Pointset::distance(std::size_t i, std::size_t j) const {
  const Point& a = points_.at(i);
  const Point& b = points_.at(j);
  switch (metric_) {
    case Metric::hamming:
      return Distance::integer(BigInt(hamming_distance(std::get<BitVector>(a), std::get<BitVector>(b))));
    case Metric::l1_int: return Distance::integer(l1_distance(std::get<IntVector>(a), std::get<IntVector>(b)));
    case Metric::linf_int: return Distance::integer(linf_distance(std::get<IntVector>(a), std::get<IntVector>(b)));
    case Metric::l2_sphere_lattice:
      return Distance::surd(
          sphere_point_sq_distance(std::get<SphereLatticePoint>(a), std::get<SphereLatticePoint>(b)));
  }
  throw std::logic_error("unreachable");
}

DiameterWitness subset_diameter(const Pointset& points, const std::vector<std::size_t>& members) {
  if (members.empty()) throw std::invalid_argument("diameter of an empty set");
  DiameterWitness best{points.distance(members[0], members[0]), members[0], members[0]};
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      Distance d = points.distance(members[a], members[b]);
      if (d > best.value) best = {std::move(d), members[a], members[b]};
    }
  }
  return best;
}

DiameterWitness pointset_diameter(const Pointset& points) {
  if (points.empty()) throw std::invalid_argument("pointset_diameter: empty pointset");
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  return subset_diameter(points, all);
}

}  // namespace maxdiam
