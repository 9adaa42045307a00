#include "maxdiam/repro.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#include "maxdiam/clustering.hpp"
#include "maxdiam/edge_coloring.hpp"
#include "maxdiam/embeddability.hpp"
#include "maxdiam/embedding.hpp"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/sphere.hpp"

namespace maxdiam {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
  Json record = Json::object();
};

SearchOptions search_options(const ReproOptions& o) {
  SearchOptions s;
  s.node_budget = o.node_budget;
  return s;
}

// Exhaustive optimum over every assignment into k clusters, pruned only by
// the best value found so far.
Distance exhaustive_optimum(const Pointset& p, int k) {
  const std::size_t n = p.size();
  std::vector<std::vector<Distance>> d(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d[a].push_back(p.distance(a, b));
  std::optional<Distance> best;
  std::vector<int> cluster(n, 0);
  std::function<void(std::size_t, int, const Distance&)> rec = [&](std::size_t i, int used, const Distance& cur) {
    if (best && !(cur < *best)) return;
    if (i == n) {
      best = cur;
      return;
    }
    for (int c = 0; c < std::min(used + 1, k); ++c) {
      cluster[i] = c;
      const Distance* worst = &cur;
      for (std::size_t j = 0; j < i; ++j)
        if (cluster[j] == c && d[i][j] > *worst) worst = &d[i][j];
      rec(i + 1, std::max(used, c + 1), *worst);
    }
  };
  rec(0, 0, d[0][0]);
  return *best;
}

Pointset random_integer_pointset(std::mt19937_64& rng, std::size_t size, int variant) {
  std::uniform_int_distribution<int> bit(0, 1), coord(0, 9), dim_small(1, 3), dim_bits(2, 8);
  if (variant == 0) {
    const std::size_t dim = dim_bits(rng);
    Pointset p(Metric::hamming, dim);
    for (std::size_t i = 0; i < size; ++i) {
      BitVector b(dim);
      for (std::size_t c = 0; c < dim; ++c) b.set(c, bit(rng));
      p.add(b);
    }
    return p;
  }
  const std::size_t dim = dim_small(rng);
  Pointset p(variant == 1 ? Metric::l1_int : Metric::linf_int, dim);
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<std::int64_t> v(dim);
    for (auto& x : v) x = coord(rng);
    p.add(IntVector(v));
  }
  return p;
}

Outcome hadamard_check() {
  Outcome out;
  out.passed = true;
  for (std::size_t q : {4, 8, 16, 32, 64}) {
    const HadamardCode code = hadamard_code(q);
    bool plus_ok = code.plus_words.size() == q;
    for (std::size_t a = 0; a < q && plus_ok; ++a)
      for (std::size_t b = a + 1; b < q; ++b)
        if (hamming_distance(code.plus_words[a], code.plus_words[b]) * 2 != q) plus_ok = false;
    const auto words = code.all_words();
    bool partner_ok = true;
    for (std::size_t a = 0; a < words.size(); ++a) {
      std::size_t far = 0;
      for (std::size_t b = 0; b < words.size(); ++b)
        if (hamming_distance(words[a], words[b]) == q) {
          ++far;
          if (!(words[b] == words[a].complement())) partner_ok = false;
        }
      if (far != 1) partner_ok = false;
    }
    out.record[std::to_string(q)] = {{"plus_pairs_at_half", plus_ok}, {"unique_complement_partner", partner_ok}};
    out.passed = out.passed && plus_ok && partner_ok;
  }
  out.detail = "q in {4,8,16,32,64}";
  return out;
}

Outcome linf_check(std::mt19937_64& rng) {
  Outcome out;
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::size_t good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_gnp(size(rng), density(rng), rng);
    const Embedding e = linf_embedding(g);
    if (verify_embedding(e).ok && e.short_value == 1 && e.long_value == 2) ++good;
  }
  out.passed = good == 50;
  out.detail = std::to_string(good) + "/50 graphs verified at short 1, long 2";
  out.record = {{"graphs", 50}, {"verified", good}};
  return out;
}

// Every edge at exactly long, every non-edge at most short.
bool exact_five_fourths(const Graph& g, const EdgeColoring& coloring) {
  const Embedding e = five_fourths_embedding(g, coloring);
  if (!verify_embedding(e).ok) return false;
  for (const Edge& edge : g.edges())
    if (embedding_distance(e, edge.u, edge.v) != e.long_value) return false;
  return e.long_value * 4 == e.short_value * 5;
}

Outcome five_fourths_check(std::mt19937_64& rng, const ReproOptions& o) {
  Outcome out;
  const Graph k44 = named::complete_bipartite(4, 4);
  const auto k44_coloring = edge_coloring(k44, 4, search_options(o));
  const bool k44_ok = k44_coloring && exact_five_fourths(k44, *k44_coloring);
  std::uniform_int_distribution<std::size_t> half(4, 10);
  std::size_t good = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const ColoredGraph cg = random_matching_union(2 * half(rng), 4, rng);
    if (exact_five_fourths(cg.graph, cg.coloring)) ++good;
  }
  out.passed = k44_ok && good == 20;
  out.detail = std::string("K4,4 ") + (k44_ok ? "ok" : "FAILED") + ", " + std::to_string(good) + "/20 random graphs";
  out.record = {{"k44", k44_ok}, {"random_graphs", 20}, {"verified", good}};
  return out;
}

Outcome gadget_check(const ReproOptions& o, std::optional<GadgetH>& gadget) {
  Outcome out;
  GadgetH h;
  if (o.gadget_path) {
    h = gadget_from_json(read_json_file(*o.gadget_path));
  } else {
    GadgetSearchOptions gs;
    gs.coloring = search_options(o);
    h = build_gadget_H(gs);
  }
  const GadgetCheck c = verify_gadget(h, search_options(o));
  const Graph aug = h.augmented();
  out.passed = c.ok() && aug.vertex_count() == kGadgetSize && c.coloring_count == 6;
  out.detail = std::to_string(aug.vertex_count()) + " vertices, " + std::to_string(c.coloring_count) +
               " proper 3-colorings, auxiliaries " + (c.aux_distinct ? "always distinct" : "NOT forced apart");
  out.record = {{"gadget", gadget_to_json(h)},
                {"vertices", aug.vertex_count()},
                {"edges", aug.edge_count()},
                {"colorings", c.coloring_count},
                {"aux_distinct", c.aux_distinct},
                {"unique_up_to_permutation", c.unique_up_to_permutation}};
  if (out.passed) gadget = h;
  return out;
}

Outcome stitched_check(const ReproOptions& o, const std::optional<GadgetH>& gadget) {
  Outcome out;
  if (!gadget) {
    out.detail = "no verified gadget available";
    return out;
  }
  const Graph j = named::complete(4);
  const bool three_edge_colorable = edge_coloring(j, 3, search_options(o)).has_value();
  const Hypergraph g = incidence_hypergraph(j);
  const CompositeGraph c = build_composite(g, *gadget, oriented_roles(g, j));
  const StitchedEmbedding st = stitch_embedding(c, j, gadget_library(*gadget));
  const EmbeddingReport rep = verify_embedding(st.embedding);
  const bool ratio_ok = rep.ok && rep.achieved_ratio && *rep.achieved_ratio == Rational(3, 2);

  Pointset image(Metric::hamming, 2 * st.q);
  for (const Point& pt : st.embedding.image) image.add(pt);
  const Clustering best = exact_cluster(image, 3, search_options(o));
  const bool cluster_ok = !best.diameter.value.is_surd() && best.diameter.value.integer_value() == st.q;

  out.passed = three_edge_colorable && ratio_ok && cluster_ok;
  out.detail = std::to_string(c.graph.vertex_count()) + " vertices, q = " + std::to_string(st.q) + ", ratio " +
               (rep.achieved_ratio ? to_string(*rep.achieved_ratio) : std::string("inf")) +
               ", optimal 3-clustering diameter " + best.diameter.value.to_string();
  out.record = {{"vertices", c.graph.vertex_count()},
                {"edges", c.graph.edge_count()},
                {"q", st.q},
                {"three_edge_colorable", three_edge_colorable},
                {"verifier", report_to_json(rep)},
                {"optimal_3_clustering_diameter", best.diameter.value.to_string()}};
  return out;
}

Outcome separation_check(const ReproOptions& o, const SphereInstance& inst) {
  Outcome out;
  const Rational t_sq = lemma53_threshold_sq();
  const ThresholdGraph tg = build_threshold_graph(inst, t_sq, o.threads);
  const AnchorSeparation s = verify_anchor_separation(inst, tg, search_options(o));
  out.passed = inst.points.size() == 270 && s.holds && !s.budget_exceeded;
  out.detail = std::to_string(inst.points.size()) + " points, " + std::to_string(s.edge_count) +
               " threshold edges, colorable " + (s.colorable ? "yes" : "no") + ", anchors forced " +
               (s.budget_exceeded ? "budget exceeded" : s.anchors_forced ? "yes" : "no") + ", " +
               std::to_string(s.nodes) + " nodes";
  out.record = {{"points", inst.points.size()},
                {"threshold_sq", to_string(t_sq)},
                {"edges", s.edge_count},
                {"colorable", s.colorable},
                {"anchors_forced", s.anchors_forced},
                {"budget_exceeded", s.budget_exceeded},
                {"nodes", s.nodes}};
  return out;
}

Outcome completeness_check(const SphereInstance& inst) {
  Outcome out;
  const ClusterCheck c = check_unit_diameter(inst, completeness_clustering(inst));
  out.passed = c.partition && c.diameter_at_most_one;
  out.detail = std::string("partition ") + (c.partition ? "ok" : "FAILED") + ", largest squared diameter " +
               (c.worst ? c.worst->value.to_string() : std::string("-"));
  out.record = {{"partition", c.partition},
                {"diameter_at_most_one", c.diameter_at_most_one},
                {"largest_squared_diameter", c.worst ? c.worst->value.to_string() : std::string()}};
  return out;
}

Outcome remark_check(const SphereInstance& inst) {
  Outcome out;
  const Assignment a = remark_clustering(inst);
  const bool bound = within_remark_bound(inst, a);
  const bool together = a[inst.anchor(1)] == a[inst.anchor(2)];
  std::optional<Distance> largest;
  for (auto& w : cluster_diameters(inst, a))
    if (w && (!largest || w->value > *largest)) largest = w->value;
  const std::string worst = largest ? largest->to_string() : "-";
  out.passed = bound && together;
  out.detail = std::string("squared diameters within 1 + sqrt(2)/2: ") + (bound ? "yes" : "no") +
               ", largest " + worst + ", e_b and e_c " + (together ? "together" : "apart");
  out.record = {{"within_bound", bound}, {"largest_squared_diameter", worst}, {"e_b_with_e_c", together}};
  return out;
}

Outcome lp_check() {
  Outcome out;
  const EmbeddabilityCertificate c = max_embeddability(named::path(7));
  out.passed = !c.solution.unbounded && c.solution.ratio == Rational(5, 3) && c.certified;
  out.detail = "r* = " + (c.solution.unbounded ? std::string("unbounded") : to_string(c.solution.ratio)) +
               ", q = " + std::to_string(c.q) + ", certified " + (c.certified ? "yes" : "no");
  out.record = certificate_to_json(c, 7);
  return out;
}

Outcome clustering_check(std::mt19937_64& rng, const ReproOptions& o) {
  Outcome out;
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::size_t exact_ok = 0, gonzalez_ok = 0, two_ok = 0, two_total = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int k = trial % 2 == 0 ? 2 : 3;
    const Pointset p = random_integer_pointset(rng, size(rng), trial % 3);
    const Distance opt = exhaustive_optimum(p, k);
    const Clustering exact = exact_cluster(p, k, search_options(o));
    if (exact.diameter.value == opt) ++exact_ok;
    const Clustering g = gonzalez_cluster(p, k);
    if (g.diameter.value.integer_value() <= 2 * opt.integer_value()) ++gonzalez_ok;
    const Distance opt2 = k == 2 ? opt : exhaustive_optimum(p, 2);
    ++two_total;
    if (two_cluster(p).diameter.value == opt2) ++two_ok;
  }
  out.passed = exact_ok == 100 && gonzalez_ok == 100 && two_ok == two_total;
  out.detail = "exact " + std::to_string(exact_ok) + "/100, gonzalez within 2x " + std::to_string(gonzalez_ok) +
               "/100, two_cluster " + std::to_string(two_ok) + "/" + std::to_string(two_total);
  out.record = {{"pointsets", 100}, {"exact_matches", exact_ok}, {"gonzalez_within_2x", gonzalez_ok},
                {"two_cluster_matches", two_ok}};
  return out;
}

Outcome jung_check(std::mt19937_64& rng) {
  Outcome out;
  std::uniform_int_distribution<int> dim(1, 4), count(1, 8), num(-10, 10), den(1, 5);
  std::size_t good = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = dim(rng);
    std::vector<std::vector<Rational>> pts(count(rng), std::vector<Rational>(d));
    for (auto& p : pts)
      for (auto& x : p) x = Rational(num(rng), den(rng));
    const auto ball = min_enclosing_ball(pts);
    bool ok = jung_bound_holds(ball.radius_sq, squared_diameter(pts), d);
    for (const auto& p : pts) {
      Rational s = 0;
      for (std::size_t c = 0; c < d; ++c) s += (p[c] - ball.center[c]) * (p[c] - ball.center[c]);
      if (s > ball.radius_sq) ok = false;
    }
    if (ok) ++good;
  }
  out.passed = good == 100;
  out.detail = std::to_string(good) + "/100 pointsets enclosed within the Jung radius";
  out.record = {{"pointsets", 100}, {"passed", good}};
  return out;
}

Outcome odd_girth_check(std::mt19937_64& rng) {
  Outcome out;
  const auto c5 = odd_girth(named::cycle(5));
  const auto c7 = odd_girth(named::cycle(7));
  const auto pet = odd_girth(named::petersen());
  std::uniform_int_distribution<std::size_t> side(1, 6);
  std::bernoulli_distribution coin(0.5);
  std::size_t bipartite_ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t a = side(rng), b = side(rng);
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = a; v < a + b; ++v)
        if (coin(rng)) g.add_edge(u, v);
    if (!odd_girth(g)) ++bipartite_ok;
  }
  out.passed = c5 == 5u && c7 == 7u && pet == 5u && bipartite_ok == 20;
  auto show = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("inf"); };
  out.detail = "C5 " + show(c5) + ", C7 " + show(c7) + ", Petersen " + show(pet) + ", bipartite randoms " +
               std::to_string(bipartite_ok) + "/20 infinite";
  out.record = {{"C5", show(c5)}, {"C7", show(c7)}, {"Petersen", show(pet)}, {"bipartite_infinite", bipartite_ok}};
  return out;
}

}  // namespace

std::string summary_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs/%.0fs", r.seconds, r.limit_seconds);
  return std::string(r.ok() ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + buf + (r.passed && !r.within_limit() ? ", over time limit" : "") + ")";
}

std::vector<CriterionResult> run_reproduction(const ReproOptions& options,
                                              const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  std::optional<GadgetH> gadget;
  std::optional<SphereInstance> sphere;
  auto run = [&](int id, const std::string& name, double limit, const std::function<Outcome(std::mt19937_64&)>& f) {
    // Each check gets its own stream so that results do not depend on which
    // checks ran before.
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(id));
    CriterionResult r{id, name, false, {}, 0.0, limit, Json::object()};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = f(rng);
      r.passed = o.passed;
      r.detail = std::move(o.detail);
      r.record = std::move(o.record);
    } catch (const BudgetExceeded& e) {
      r.detail = std::string("budget exceeded: ") + e.what();
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.record["criterion"] = id;
    r.record["name"] = name;
    r.record["passed"] = r.passed;
    r.record["detail"] = r.detail;
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  auto region = [&]() -> const SphereInstance& {
    if (!sphere) sphere = single_region_instance(12);
    return *sphere;
  };

  run(1, "Hadamard code distances", 1, [](std::mt19937_64&) { return hadamard_check(); });
  run(2, "l-infinity 2-embedding", 1, [](std::mt19937_64& rng) { return linf_check(rng); });
  run(3, "5/4 Hamming embedding", 5, [&](std::mt19937_64& rng) { return five_fourths_check(rng, options); });
  run(4, "gadget forces auxiliaries apart", 60, [&](std::mt19937_64&) { return gadget_check(options, gadget); });
  run(5, "3/2 stitched embedding of K4", 120, [&](std::mt19937_64&) { return stitched_check(options, gadget); });
  run(6, "sphere region anchor separation", 1800, [&](std::mt19937_64&) { return separation_check(options, region()); });
  run(7, "sphere completeness partition", 10, [&](std::mt19937_64&) { return completeness_check(region()); });
  run(8, "minimum-coordinate clustering", 10, [&](std::mt19937_64&) { return remark_check(region()); });
  run(9, "P7 embeddability LP", 10, [](std::mt19937_64&) { return lp_check(); });
  run(10, "clustering oracles", 60, [&](std::mt19937_64& rng) { return clustering_check(rng, options); });
  run(11, "Jung enclosing-ball bound", 30, [](std::mt19937_64& rng) { return jung_check(rng); });
  run(12, "odd girth", 1, [](std::mt19937_64& rng) { return odd_girth_check(rng); });
  return results;
}

}  // namespace maxdiam
