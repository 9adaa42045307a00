#include "maxdiam/sphere.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace maxdiam {

Rational lemma53_threshold_sq() { return Rational(163 * 163, 125 * 125); }

namespace {

// Unnormalised coordinate of p on axis (0 when off-support).
std::int64_t coordinate(const SphereLatticePoint& p, std::uint32_t axis) {
  for (auto& [a, c] : p.signed_support())
    if (a == axis) return c;
  return 0;
}

SphereLatticePoint axis_point(std::uint32_t axis, bool positive, std::uint32_t kappa, std::uint32_t other1,
                              std::uint32_t other2) {
  // Positive: weight on the positive axis. Negative: weight on a negative axis
  // of a region whose positive axis is other1.
  if (positive) return SphereLatticePoint({axis, other1, other2}, axis, {kappa, 0, 0}, kappa);
  return SphereLatticePoint({axis, other1, other2}, other1, {kappa, 0, 0}, kappa);
}

}  // namespace

std::vector<SphereLatticePoint> region_points(const Axes& axes, std::uint32_t kappa) {
  if (kappa == 0) throw std::invalid_argument("region_points: kappa must be positive");
  std::vector<SphereLatticePoint> out;
  std::set<std::string> seen;
  for (std::uint32_t family = 0; family < 3; ++family) {
    for (std::uint32_t alpha_a = 0; alpha_a <= kappa; ++alpha_a) {
      for (std::uint32_t alpha_b = 0; alpha_a + alpha_b <= kappa; ++alpha_b) {
        SphereLatticePoint p(axes, axes[family], {alpha_a, alpha_b, kappa - alpha_a - alpha_b}, kappa);
        if (seen.insert(p.key()).second) out.push_back(p);
      }
    }
  }
  return out;
}

bool in_region(const SphereLatticePoint& p, const Axes& axes, std::uint32_t v) {
  for (auto& [axis, c] : p.signed_support()) {
    if (std::find(axes.begin(), axes.end(), axis) == axes.end()) return false;
    if (axis == v ? c < 0 : c > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- instance

std::optional<std::size_t> SphereInstance::index_of(const SphereLatticePoint& p) const {
  const std::string key = p.key();
  auto it = std::lower_bound(points.begin(), points.end(), key,
                             [](const SphereLatticePoint& q, const std::string& k) { return q.key() < k; });
  if (it != points.end() && it->key() == key) return static_cast<std::size_t>(it - points.begin());
  return std::nullopt;
}

namespace {

std::size_t find_axis_point(const SphereInstance& inst, std::uint32_t v, bool positive) {
  for (const Axes& axes : inst.regions) {
    auto pos = std::find(axes.begin(), axes.end(), v);
    if (pos == axes.end()) continue;
    std::uint32_t others[2];
    int n = 0;
    for (auto a : axes)
      if (a != v) others[n++] = a;
    if (auto idx = inst.index_of(axis_point(v, positive, inst.kappa, others[0], others[1]))) return *idx;
  }
  throw std::out_of_range("SphereInstance: axis " + std::to_string(v) + " carries no region");
}

}  // namespace

std::size_t SphereInstance::anchor(std::uint32_t v) const { return find_axis_point(*this, v, true); }
std::size_t SphereInstance::anti_anchor(std::uint32_t v) const { return find_axis_point(*this, v, false); }

Pointset SphereInstance::to_pointset() const {
  Pointset ps(Metric::l2_sphere_lattice, axis_count);
  std::unordered_map<std::size_t, std::string> names;
  std::set<std::uint32_t> axes;
  for (const Axes& r : regions) axes.insert(r.begin(), r.end());
  for (auto v : axes) {
    names[anchor(v)] = "e_" + std::to_string(v);
    names[anti_anchor(v)] = "-e_" + std::to_string(v);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto it = names.find(i);
    ps.add(points[i], it != names.end() ? it->second : "p:" + points[i].key());
  }
  return ps;
}

namespace {

SphereInstance assemble(std::uint32_t kappa, std::size_t axis_count, std::vector<Axes> regions) {
  SphereInstance inst;
  inst.kappa = kappa;
  inst.axis_count = axis_count;
  inst.regions = std::move(regions);
  std::map<std::string, std::pair<SphereLatticePoint, std::string>> by_key;
  for (std::size_t r = 0; r < inst.regions.size(); ++r) {
    const Axes& axes = inst.regions[r];
    for (std::uint32_t family = 0; family < 3; ++family) {
      for (std::uint32_t alpha_a = 0; alpha_a <= kappa; ++alpha_a) {
        for (std::uint32_t alpha_b = 0; alpha_a + alpha_b <= kappa; ++alpha_b) {
          SphereLatticePoint p(axes, axes[family], {alpha_a, alpha_b, kappa - alpha_a - alpha_b}, kappa);
          std::string tag = "r" + std::to_string(r) + ":f" + std::to_string(family);
          auto [it, fresh] = by_key.try_emplace(p.key(), p, tag);
          if (!fresh) it->second.second += "," + tag;
        }
      }
    }
  }
  for (auto& [key, entry] : by_key) {
    inst.points.push_back(entry.first);
    inst.provenance.push_back(entry.second);
  }
  return inst;
}

}  // namespace

SphereInstance single_region_instance(std::uint32_t kappa) {
  if (kappa == 0) throw std::invalid_argument("single_region_instance: kappa must be positive");
  return assemble(kappa, 3, {Axes{0, 1, 2}});
}

SphereInstance build_P_G(const Hypergraph& g, std::uint32_t kappa) {
  if (kappa == 0) throw std::invalid_argument("build_P_G: kappa must be positive");
  if (!g.is_uniform(3)) throw std::invalid_argument("build_P_G: hypergraph must be 3-uniform");
  std::vector<Axes> regions;
  for (const auto& e : g.hyperedges()) {
    Axes axes{e[0], e[1], e[2]};
    std::sort(axes.begin(), axes.end());
    regions.push_back(axes);
  }
  return assemble(kappa, g.vertex_count(), std::move(regions));
}

// ---------------------------------------------------------------- threshold graph

ThresholdGraph build_threshold_graph(const SphereInstance& inst, const Rational& t_sq, unsigned threads) {
  if (t_sq <= 0) throw std::invalid_argument("build_threshold_graph: threshold must be positive");
  const std::size_t n = inst.points.size();
  threads = std::max(1u, threads);
  // Row i is owned by worker i % threads; rows are merged in index order.
  std::vector<std::vector<Vertex>> far(n);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < n; i += threads)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sq_distance_exceeds(inst.points[i], inst.points[j], t_sq)) far[i].push_back(Vertex(j));
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  ThresholdGraph out{t_sq, Graph(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex j : far[i]) out.graph.add_edge(Vertex(i), j);
  return out;
}

AnchorSeparation verify_anchor_separation(const SphereInstance& inst, const Rational& t_sq,
                                          const SearchOptions& options) {
  return verify_anchor_separation(inst, build_threshold_graph(inst, t_sq), options);
}

AnchorSeparation verify_anchor_separation(const SphereInstance& inst, const ThresholdGraph& tg,
                                          const SearchOptions& options) {
  if (inst.regions.size() != 1) throw std::invalid_argument("verify_anchor_separation: single-region instance expected");
  const Axes& axes = inst.regions[0];
  std::vector<Vertex> anchors;
  for (auto v : axes) anchors.push_back(Vertex(inst.anchor(v)));

  AnchorSeparation out;
  out.edge_count = tg.graph.edge_count();
  SearchOptions opts = options;
  opts.priority = anchors;

  ColoringSearchResult first = find_coloring(tg.graph, 3, opts);
  out.nodes += first.nodes;
  if (first.status == SearchStatus::budget_exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  out.colorable = first.status == SearchStatus::found;
  if (out.colorable) out.witness_coloring = first.coloring;

  opts.node_budget = options.node_budget > first.nodes ? options.node_budget - first.nodes : 0;
  ForallResult all = forall_colorings(tg.graph, 3, distinct_colors_predicate(anchors), opts);
  out.nodes += all.nodes;
  if (all.outcome == ForallResult::Outcome::budget_exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  out.anchors_forced = all.outcome == ForallResult::Outcome::holds;
  out.counterexample = all.counterexample;
  out.holds = out.colorable && out.anchors_forced;
  return out;
}

// ---------------------------------------------------------------- clusterings

Assignment completeness_clustering(const SphereInstance& inst) {
  if (inst.regions.size() != 1) throw std::invalid_argument("completeness_clustering: single-region instance expected");
  const Axes& ax = inst.regions[0];
  const std::size_t skip[3] = {inst.anti_anchor(ax[1]), inst.anti_anchor(ax[2]), inst.anti_anchor(ax[0])};
  Assignment out(inst.points.size(), -1);
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (int x = 0; x < 3; ++x) {
      if (i == skip[x] || !in_region(inst.points[i], ax, ax[x])) continue;
      if (out[i] >= 0) throw std::logic_error("completeness_clustering: overlapping clusters");
      out[i] = x;
    }
    if (out[i] < 0) throw std::logic_error("completeness_clustering: point left uncovered");
  }
  return out;
}

Assignment coloring_to_clustering(const SphereInstance& inst, const Hypergraph& g, const Coloring& coloring) {
  if (!is_proper_coloring(g.primal_graph(), coloring, 3))
    throw std::invalid_argument("coloring_to_clustering: not a proper rainbow 3-coloring");
  if (g.hyperedges().size() != inst.regions.size())
    throw std::invalid_argument("coloring_to_clustering: instance does not match hypergraph");
  Assignment out(inst.points.size(), -1);
  for (int cluster = 0; cluster < 3; ++cluster) {
    for (const auto& e : g.hyperedges()) {
      Axes axes{e[0], e[1], e[2]};
      std::sort(axes.begin(), axes.end());
      Vertex v = *std::find_if(e.begin(), e.end(), [&](Vertex x) { return coloring[x] == cluster; });
      for (std::size_t i = 0; i < inst.points.size(); ++i)
        if (out[i] < 0 && in_region(inst.points[i], axes, v)) out[i] = cluster;
    }
  }
  if (std::find(out.begin(), out.end(), -1) != out.end())
    throw std::logic_error("coloring_to_clustering: point left uncovered");
  return out;
}

Assignment remark_clustering(const SphereInstance& inst) {
  if (inst.regions.size() != 1) throw std::invalid_argument("remark_clustering: single-region instance expected");
  const Axes& ax = inst.regions[0];
  Assignment out(inst.points.size(), -1);
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    // All coordinates of one point share the normalisation, so comparing the
    // integer coefficients compares the coordinates.
    std::int64_t x[3];
    for (int t = 0; t < 3; ++t) x[t] = coordinate(inst.points[i], ax[t]);
    if (x[0] <= x[1] && x[0] <= x[2])
      out[i] = 0;
    else if (x[1] <= x[2] && x[1] <= x[0])
      out[i] = 1;
    else
      out[i] = 2;
  }
  return out;
}

std::vector<std::optional<DiameterWitness>> cluster_diameters(const SphereInstance& inst, const Assignment& clusters,
                                                              int k) {
  Pointset ps(Metric::l2_sphere_lattice, inst.axis_count);
  for (const auto& p : inst.points) ps.add(p);
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < clusters.size(); ++i) members.at(static_cast<std::size_t>(clusters[i])).push_back(i);
  std::vector<std::optional<DiameterWitness>> out;
  for (auto& m : members) {
    if (m.empty())
      out.emplace_back(std::nullopt);
    else
      out.emplace_back(subset_diameter(ps, m));
  }
  return out;
}

ClusterCheck check_unit_diameter(const SphereInstance& inst, const Assignment& clusters, int k) {
  ClusterCheck out;
  out.partition = clusters.size() == inst.points.size() &&
                  std::all_of(clusters.begin(), clusters.end(), [k](int c) { return c >= 0 && c < k; });
  if (!out.partition) return out;
  out.diameter_at_most_one = true;
  out.nonnegative_inner_products = true;
  for (auto& d : cluster_diameters(inst, clusters, k)) {
    if (!d) continue;
    if (!out.worst || d->value > out.worst->value) out.worst = d;
    if (compare(d->value.surd_value(), Rational(1)) == std::strong_ordering::greater)
      out.diameter_at_most_one = false;
  }
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    for (std::size_t j = i + 1; j < inst.points.size(); ++j)
      if (clusters[i] == clusters[j] && inner_product(inst.points[i], inst.points[j]) < 0)
        out.nonnegative_inner_products = false;
  return out;
}

bool within_remark_bound(const SphereInstance& inst, const Assignment& clusters) {
  for (std::size_t i = 0; i < inst.points.size(); ++i)
    for (std::size_t j = i + 1; j < inst.points.size(); ++j)
      if (clusters[i] == clusters[j] &&
          !at_most_one_plus_half_sqrt2(sphere_point_sq_distance(inst.points[i], inst.points[j])))
        return false;
  return true;
}

// ---------------------------------------------------------------- sweep

std::string SweepReport::to_csv() const {
  std::ostringstream out;
  out << "kappa,t_num,t_den,separation_holds,nodes_explored,seconds\n";
  for (const auto& r : rows) {
    out << r.kappa << ',' << numerator(r.t) << ',' << denominator(r.t) << ','
        << (r.budget_exceeded ? "budget_exceeded" : (r.separation_holds ? "true" : "false")) << ',' << r.nodes
        << ',' << r.seconds << '\n';
  }
  return out.str();
}

SweepReport kappa_sweep(const std::vector<std::uint32_t>& kappas, const std::vector<Rational>& t_grid,
                        const SearchOptions& options, unsigned threads) {
  SweepReport report;
  std::vector<Rational> ts = t_grid;
  std::sort(ts.begin(), ts.end());
  for (auto kappa : kappas) {
    SphereInstance inst = single_region_instance(kappa);
    std::vector<SweepRow> rows;
    for (const Rational& t : ts) {
      auto start = std::chrono::steady_clock::now();
      AnchorSeparation sep = verify_anchor_separation(inst, build_threshold_graph(inst, t * t, threads), options);
      SweepRow row;
      row.kappa = kappa;
      row.t = t;
      row.separation_holds = sep.holds;
      row.anchors_forced = sep.anchors_forced;
      row.colorable = sep.colorable;
      row.budget_exceeded = sep.budget_exceeded;
      row.nodes = sep.nodes;
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(row);
    }
    // Lowering t only adds edges, so forcing at t must persist below t.
    for (std::size_t hi = 0; hi < rows.size(); ++hi) {
      if (rows[hi].budget_exceeded || !rows[hi].anchors_forced) continue;
      for (std::size_t lo = 0; lo < hi; ++lo) {
        if (rows[lo].budget_exceeded || rows[lo].anchors_forced) continue;
        report.monotonicity_violations.push_back("kappa=" + std::to_string(kappa) + " t=" + to_string(rows[lo].t) +
                                                 " < " + to_string(rows[hi].t));
      }
    }
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace maxdiam
