#include "maxdiam/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "maxdiam/clustering.hpp"
#include "maxdiam/edge_coloring.hpp"
#include "maxdiam/embeddability.hpp"
#include "maxdiam/gadgets.hpp"
#include "maxdiam/graph_algorithms.hpp"
#include "maxdiam/repro.hpp"
#include "maxdiam/sphere.hpp"

#ifndef MAXDIAM_VERSION
#define MAXDIAM_VERSION "dev"
#endif

namespace maxdiam {

namespace {

struct Globals {
  std::uint64_t budget = default_node_budget();
  unsigned threads = 1;
  std::uint64_t seed = ReproOptions{}.seed;
  std::string out;
  bool json = false;
  bool timing = false;
};

struct Result {
  int code = kExitOk;
  Json report = Json::object();
  /// One human-readable line for the non-JSON mode.
  std::string summary;
  /// Written to --out when given.
  std::optional<std::string> artifact;
};

SearchOptions options_of(const Globals& g) {
  SearchOptions s;
  s.node_budget = g.budget;
  return s;
}

std::string show(const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : "infinity"; }

Json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"approx", r.convert_to<double>()}};
}

Json distance_json(const Distance& d) {
  if (d.is_surd()) {
    const auto& s = d.surd_value();
    return {{"squared", {{"m", s.m.str()}, {"n1", s.n1.str()}, {"n2", s.n2.str()}}},
            {"text", s.to_string()},
            {"approx", d.approx()}};
  }
  return {{"value", d.integer_value().str()}, {"approx", d.approx()}};
}

GadgetH load_or_build_gadget(const std::string& path, const Globals& g) {
  if (!path.empty()) return gadget_from_json(read_json_file(path));
  GadgetSearchOptions gs;
  gs.coloring = options_of(g);
  return build_gadget_H(gs);
}

std::vector<std::uint32_t> parse_kappas(const std::string& text) {
  std::vector<std::uint32_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = std::stoul(text.substr(0, dots)), hi = std::stoul(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("empty kappa range '" + text + "'");
    for (auto k = lo; k <= hi; ++k) out.push_back(static_cast<std::uint32_t>(k));
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty list of thresholds");
  return out;
}

Graph named_graph(const std::string& name, std::size_t n, std::size_t m) {
  if (name == "path") return named::path(n);
  if (name == "cycle") return named::cycle(n);
  if (name == "complete") return named::complete(n);
  if (name == "complete-bipartite") return named::complete_bipartite(n, m);
  if (name == "petersen") return named::petersen();
  if (name == "chvatal") return named::chvatal();
  throw std::invalid_argument("unknown graph family '" + name + "'");
}

Result stitched(const std::string& graph_path, const std::string& gadget_path, const Globals& g, bool embed) {
  const Graph j = read_graph_file(graph_path);
  const GadgetH h = load_or_build_gadget(gadget_path, g);
  const Hypergraph hg = incidence_hypergraph(j);
  const CompositeGraph c = build_composite(hg, h, oriented_roles(hg, j));
  Result r;
  r.report["composite"] = {{"vertices", c.graph.vertex_count()}, {"edges", c.graph.edge_count()}};
  if (!embed) {
    Json provenance = Json::array();
    for (const auto& o : c.provenance) provenance.push_back({o.hyperedge, o.local});
    r.artifact = Json({{"graph", graph_to_json(c.graph)},
                       {"hypergraph", hypergraph_to_json(c.source)},
                       {"roles", c.roles},
                       {"provenance", provenance},
                       {"gadget", gadget_to_json(h)}})
                     .dump(2);
    r.summary = "composite graph with " + std::to_string(c.graph.vertex_count()) + " vertices and " +
                std::to_string(c.graph.edge_count()) + " edges";
    return r;
  }
  const StitchedEmbedding st = stitch_embedding(c, j, gadget_library(h));
  const EmbeddingReport rep = verify_embedding(st.embedding);
  Pointset ps(Metric::hamming, 2 * st.q);
  for (Vertex v = 0; v < c.graph.vertex_count(); ++v) {
    const auto& o = c.provenance[v];
    const std::string label =
        o.hyperedge < 0 ? "v" + std::to_string(o.local) : "h" + std::to_string(o.hyperedge) + ":" + std::to_string(o.local);
    ps.add(st.embedding.image[v], label);
  }
  Json orientations = Json::array();
  for (const auto& o : st.orientations) orientations.push_back(to_string(o));
  r.report["q"] = st.q;
  r.report["orientations"] = orientations;
  r.report["verifier"] = report_to_json(rep);
  const bool three_halves = rep.ok && rep.achieved_ratio && *rep.achieved_ratio == Rational(3, 2);
  r.report["ratio_three_halves"] = three_halves;
  r.code = three_halves ? kExitOk : kExitRefuted;
  r.artifact = pointset_to_json(ps).dump(2);
  r.summary = "stitched embedding, q = " + std::to_string(st.q) + ", ratio " +
              (rep.achieved_ratio ? to_string(*rep.achieved_ratio) : std::string("infinite")) +
              (rep.ok ? ", verified" : ", VIOLATIONS");
  return r;
}

Result check_embedding(const Embedding& e) {
  Result r;
  const EmbeddingReport rep = verify_embedding(e);
  r.report["verifier"] = report_to_json(rep);
  r.code = rep.ok ? kExitOk : kExitRefuted;
  r.artifact = embedding_to_json(e).dump(2);
  r.summary = std::string(rep.ok ? "embedding verified" : "embedding violates its bounds") + ", short " +
              e.short_value.str() + ", long " + e.long_value.str();
  return r;
}

Result repro(const Globals& g, const std::string& gadget_path, std::ostream& out) {
  ReproOptions o;
  o.seed = g.seed;
  o.node_budget = g.budget;
  o.threads = g.threads;
  if (!gadget_path.empty()) o.gadget_path = gadget_path;
  const auto results = run_reproduction(o, [&](const CriterionResult& c) {
    if (!g.json) out << summary_line(c) << std::endl;
  });
  Result r;
  Json criteria = Json::array();
  Json timing = Json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.ok();
    criteria.push_back({{"criterion", c.id}, {"name", c.name}, {"passed", c.ok()}, {"detail", c.detail}});
    timing.push_back({{"criterion", c.id}, {"seconds", c.seconds}, {"limit_seconds", c.limit_seconds}});
  }
  r.report["criteria"] = criteria;
  r.report["all_passed"] = all;
  r.code = all ? kExitOk : kExitRefuted;
  if (!g.out.empty()) {
    std::filesystem::create_directories(g.out);
    for (const auto& c : results) {
      std::ostringstream name;
      name << "criterion_" << std::setw(2) << std::setfill('0') << c.id << ".json";
      write_text_file(std::filesystem::path(g.out) / name.str(), c.record.dump(2) + "\n");
    }
    Json summary = r.report;
    summary["wall_clock"] = timing;
    write_text_file(std::filesystem::path(g.out) / "summary.json", summary.dump(2) + "\n");
  }
  std::size_t passed = 0;
  for (const auto& c : results) passed += c.ok();
  r.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed";
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-k-Diameter hardness instances, verifiers and clustering tools", "maxdiam"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", MAXDIAM_VERSION);
  Globals g;
  app.add_option("--budget-nodes", g.budget, "Search node budget (default from MAXDIAM_BUDGET_NODES)");
  app.add_option("--threads", g.threads, "Worker threads for threshold-graph construction")->check(CLI::Range(1, 256));
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--out", g.out, "Write the command's artifact here (a directory for repro-all)");
  app.add_flag("--json", g.json, "Print the full JSON report");
  app.add_flag("--timing", g.timing, "Include wall-clock time in the report");

  std::string command;
  Json parameters = Json::object();
  std::function<Result()> action;
  auto on = [&](CLI::App* sub, const std::string& name, std::function<Result()> f) {
    sub->callback([&, name, f] {
      command = name;
      action = f;
    });
  };

  // graph
  auto* graph = app.add_subcommand("graph", "Named graphs and graph diagnostics");
  graph->require_subcommand(1);
  std::string family, graph_path, gadget_path, pointset_path, hyper_path, embedding_path;
  std::size_t size_n = 0, size_m = 0;
  auto* graph_named = graph->add_subcommand("named", "Write a named graph as JSON");
  graph_named->add_option("family", family, "path, cycle, complete, complete-bipartite, petersen, chvatal")->required();
  graph_named->add_option("--n", size_n, "Size parameter");
  graph_named->add_option("--m", size_m, "Second side for complete-bipartite");
  on(graph_named, "graph named", [&] {
    const Graph h = named_graph(family, size_n, size_m);
    parameters = {{"family", family}, {"n", size_n}, {"m", size_m}};
    Result r;
    r.report["graph"] = graph_to_json(h);
    r.artifact = graph_to_json(h).dump();
    r.summary = graph_to_json(h).dump();
    return r;
  });
  auto* graph_girth = graph->add_subcommand("odd-girth", "Shortest odd cycle length");
  graph_girth->add_option("--graph", graph_path, "Graph file")->required();
  on(graph_girth, "graph odd-girth", [&] {
    parameters = {{"graph", graph_path}};
    const auto girth = odd_girth(read_graph_file(graph_path));
    Result r;
    r.report["odd_girth"] = girth ? Json(*girth) : Json("infinity");
    r.summary = "odd girth " + show(girth);
    return r;
  });

  // gadget
  auto* gadget = app.add_subcommand("gadget", "Chvatal gadget construction and verification");
  gadget->require_subcommand(1);
  std::uint32_t max_private = GadgetSearchOptions{}.max_private_letters;
  auto* gadget_build = gadget->add_subcommand("build", "Search for a gadget and its attachment sets");
  gadget_build->add_option("--max-private", max_private, "Private letters allowed per embedding");
  on(gadget_build, "gadget build", [&] {
    parameters = {{"max_private", max_private}};
    GadgetSearchOptions gs;
    gs.max_private_letters = max_private;
    gs.coloring = options_of(g);
    const GadgetH h = build_gadget_H(gs);
    const GadgetCheck c = verify_gadget(h, options_of(g));
    Result r;
    r.report["gadget"] = gadget_to_json(h);
    r.report["colorings"] = c.coloring_count;
    r.report["verified"] = c.ok();
    r.code = c.ok() ? kExitOk : kExitRefuted;
    r.artifact = gadget_to_json(h).dump(2);
    r.summary = "gadget without Chvatal edge " + std::to_string(h.removed_edge.u) + "-" +
                std::to_string(h.removed_edge.v) + ", " + std::to_string(c.coloring_count) + " colorings";
    return r;
  });
  auto* gadget_verify = gadget->add_subcommand("verify", "Exhaustively check a gadget file");
  gadget_verify->add_option("--gadget", gadget_path, "Gadget JSON")->required();
  on(gadget_verify, "gadget verify", [&] {
    parameters = {{"gadget", gadget_path}};
    const GadgetH h = gadget_from_json(read_json_file(gadget_path));
    const GadgetCheck c = verify_gadget(h, options_of(g));
    Result r;
    r.report["colorable"] = c.colorable;
    r.report["aux_distinct"] = c.aux_distinct;
    r.report["colorings"] = c.coloring_count;
    r.report["unique_up_to_permutation"] = c.unique_up_to_permutation;
    r.report["budget_exceeded"] = c.budget_exceeded;
    r.code = c.budget_exceeded ? kExitBudget : c.ok() ? kExitOk : kExitRefuted;
    r.summary = std::string(c.ok() ? "gadget verified" : "gadget FAILED") + ": " + std::to_string(c.coloring_count) +
                " colorings, auxiliaries " + (c.aux_distinct ? "forced apart" : "not forced apart");
    return r;
  });

  // composite
  auto* composite = app.add_subcommand("composite", "Gadget composite of a cubic bridgeless graph");
  composite->require_subcommand(1);
  for (const char* name : {"build", "embed"}) {
    const bool embed = std::string(name) == "embed";
    auto* sub = composite->add_subcommand(name, embed ? "Stitched 3/2-embedding as a Hamming pointset"
                                                      : "Composite graph with provenance");
    sub->add_option("--graph", graph_path, "3-regular bridgeless graph J")->required();
    sub->add_option("--gadget", gadget_path, "Gadget JSON (searched for when absent)");
    on(sub, std::string("composite ") + name, [&, embed] {
      parameters = {{"graph", graph_path}, {"gadget", gadget_path}};
      return stitched(graph_path, gadget_path, g, embed);
    });
  }

  // embed
  auto* embed = app.add_subcommand("embed", "Graph embeddings and the embedding verifier");
  embed->require_subcommand(1);
  auto* embed_verify = embed->add_subcommand("verify", "Check an embedding file");
  embed_verify->add_option("--embedding", embedding_path, "Embedding JSON")->required();
  on(embed_verify, "embed verify", [&] {
    parameters = {{"embedding", embedding_path}};
    Result r = check_embedding(embedding_from_json(read_json_file(embedding_path)));
    r.artifact.reset();
    return r;
  });
  auto* embed_linf = embed->add_subcommand("linf", "2-embedding into l-infinity");
  embed_linf->add_option("--graph", graph_path, "Graph file")->required();
  on(embed_linf, "embed linf", [&] {
    parameters = {{"graph", graph_path}};
    return check_embedding(linf_embedding(read_graph_file(graph_path)));
  });
  auto* embed_ff = embed->add_subcommand("five-fourths", "5/4-embedding of a 4-edge-colorable graph");
  embed_ff->add_option("--graph", graph_path, "Graph file")->required();
  on(embed_ff, "embed five-fourths", [&] {
    parameters = {{"graph", graph_path}};
    const Graph h = read_graph_file(graph_path);
    const auto coloring = edge_coloring(h, 4, options_of(g));
    if (!coloring) {
      Result r;
      r.code = kExitRefuted;
      r.report["four_edge_colorable"] = false;
      r.summary = "graph is not 4-edge-colorable";
      return r;
    }
    return check_embedding(five_fourths_embedding(h, *coloring));
  });

  // sphere
  auto* sphere = app.add_subcommand("sphere", "Sphere lattice instances");
  sphere->require_subcommand(1);
  std::uint32_t kappa = 12;
  std::string t_text = "163/125", kappa_text = "4..12", grid_text = "163/125";
  auto* sphere_region = sphere->add_subcommand("region", "Lattice points of one region");
  sphere_region->add_option("--kappa", kappa, "Lattice resolution")->check(CLI::Range(1, 200));
  on(sphere_region, "sphere region", [&] {
    parameters = {{"kappa", kappa}};
    const SphereInstance inst = single_region_instance(kappa);
    Result r;
    r.report["points"] = inst.points.size();
    r.report["anchors"] = {inst.anchor(0), inst.anchor(1), inst.anchor(2)};
    r.artifact = pointset_to_json(inst.to_pointset()).dump(2);
    r.summary = std::to_string(inst.points.size()) + " points";
    return r;
  });
  auto* sphere_verify = sphere->add_subcommand("verify-lemma53", "Anchor separation on one region");
  sphere_verify->add_option("--kappa", kappa, "Lattice resolution")->check(CLI::Range(1, 200));
  sphere_verify->add_option("--t", t_text, "Distance threshold t");
  on(sphere_verify, "sphere verify-lemma53", [&] {
    const Rational t = parse_rational(t_text);
    parameters = {{"kappa", kappa}, {"t", rational_json(t)}};
    const SphereInstance inst = single_region_instance(kappa);
    const ThresholdGraph tg = build_threshold_graph(inst, t * t, g.threads);
    const AnchorSeparation s = verify_anchor_separation(inst, tg, options_of(g));
    Result r;
    r.report["points"] = inst.points.size();
    r.report["edges"] = s.edge_count;
    r.report["colorable"] = s.colorable;
    r.report["anchors_forced"] = s.anchors_forced;
    r.report["budget_exceeded"] = s.budget_exceeded;
    r.report["nodes"] = s.nodes;
    if (s.counterexample) r.report["counterexample"] = *s.counterexample;
    r.code = s.budget_exceeded ? kExitBudget : s.holds ? kExitOk : kExitRefuted;
    r.summary = std::to_string(inst.points.size()) + " points, " + std::to_string(s.edge_count) + " edges: " +
                (s.budget_exceeded ? "budget exceeded"
                 : s.holds         ? "every 3-coloring separates the anchors"
                 : !s.colorable    ? "threshold graph is not 3-colorable"
                                   : "a 3-coloring merges two anchors");
    return r;
  });
  auto* sphere_reduce = sphere->add_subcommand("reduce", "Union of regions over a 3-uniform hypergraph");
  sphere_reduce->add_option("--hypergraph", hyper_path, "Hypergraph JSON")->required();
  sphere_reduce->add_option("--kappa", kappa, "Lattice resolution")->check(CLI::Range(1, 200));
  on(sphere_reduce, "sphere reduce", [&] {
    parameters = {{"hypergraph", hyper_path}, {"kappa", kappa}};
    const Hypergraph hg = hypergraph_from_json(read_json_file(hyper_path));
    const SphereInstance inst = build_P_G(hg, kappa);
    Result r;
    r.report["points"] = inst.points.size();
    r.report["axes"] = inst.axis_count;
    const ColoringSearchResult rb = rainbow_first(hg, 3, options_of(g));
    if (rb.status == SearchStatus::budget_exceeded) {
      r.code = kExitBudget;
      r.report["rainbow_colorable"] = "budget exceeded";
    } else if (rb.status == SearchStatus::found) {
      const ClusterCheck c = check_unit_diameter(inst, coloring_to_clustering(inst, hg, rb.coloring));
      r.report["rainbow_colorable"] = true;
      r.report["clustering_diameter_at_most_one"] = c.diameter_at_most_one;
      if (c.worst) r.report["largest_squared_diameter"] = distance_json(c.worst->value);
      if (!c.diameter_at_most_one) r.code = kExitRefuted;
    } else {
      r.report["rainbow_colorable"] = false;
    }
    r.artifact = pointset_to_json(inst.to_pointset()).dump(2);
    r.summary = std::to_string(inst.points.size()) + " points over " + std::to_string(inst.axis_count) + " axes";
    return r;
  });
  auto* sphere_sweep = sphere->add_subcommand("sweep", "Anchor separation over kappa and t grids (CSV)");
  sphere_sweep->add_option("--kappa", kappa_text, "Range a..b or list a,b,c");
  sphere_sweep->add_option("--t-grid", grid_text, "Comma-separated thresholds");
  on(sphere_sweep, "sphere sweep", [&] {
    const auto kappas = parse_kappas(kappa_text);
    const auto grid = parse_rationals(grid_text);
    Json ts = Json::array();
    for (const auto& t : grid) ts.push_back(to_string(t));
    parameters = {{"kappa", kappas}, {"t_grid", ts}};
    const SweepReport s = kappa_sweep(kappas, grid, options_of(g), g.threads);
    Result r;
    Json rows = Json::array();
    for (const auto& row : s.rows)
      rows.push_back({{"kappa", row.kappa},
                      {"t", to_string(row.t)},
                      {"colorable", row.colorable},
                      {"anchors_forced", row.anchors_forced},
                      {"separation_holds", row.separation_holds},
                      {"budget_exceeded", row.budget_exceeded},
                      {"nodes", row.nodes}});
    r.report["rows"] = rows;
    r.report["monotonicity_violations"] = s.monotonicity_violations;
    r.artifact = s.to_csv();
    r.summary = s.to_csv();
    return r;
  });

  // cluster
  auto* cluster = app.add_subcommand("cluster", "Max-k-Diameter clustering of a pointset");
  std::string algorithm;
  int k = 3;
  cluster->add_option("algorithm", algorithm, "exact, gonzalez or two")
      ->required()
      ->check(CLI::IsMember({"exact", "gonzalez", "two"}));
  cluster->add_option("--pointset", pointset_path, "Pointset JSON")->required();
  cluster->add_option("--k", k, "Number of clusters")->check(CLI::Range(1, 64));
  on(cluster, "cluster", [&] {
    parameters = {{"algorithm", algorithm}, {"pointset", pointset_path}, {"k", k}};
    const Pointset p = pointset_from_json(read_json_file(pointset_path));
    const Clustering c = algorithm == "exact"      ? exact_cluster(p, k, options_of(g))
                         : algorithm == "gonzalez" ? gonzalez_cluster(p, k)
                                                   : two_cluster(p);
    Result r;
    r.report["clustering"] = clustering_to_json(p, c);
    r.artifact = clustering_to_json(p, c).dump(2);
    r.summary = algorithm + " " + std::to_string(c.k) + "-clustering of " + std::to_string(p.size()) +
                " points, diameter " + c.diameter.value.to_string();
    return r;
  });

  // barrier
  auto* barrier = app.add_subcommand("barrier", "Enclosing-ball and odd-girth diagnostic");
  std::string ratio_text = "3/2";
  barrier->add_option("--pointset", pointset_path, "Pointset JSON")->required();
  barrier->add_option("--k", k, "Number of clusters")->check(CLI::Range(1, 4));
  barrier->add_option("--ratio", ratio_text, "Probe ratio r");
  on(barrier, "barrier", [&] {
    const Rational ratio = parse_rational(ratio_text);
    parameters = {{"pointset", pointset_path}, {"k", k}, {"ratio", rational_json(ratio)}};
    const Pointset p = pointset_from_json(read_json_file(pointset_path));
    const BarrierReport b = barrier_screen(p, k, ratio, options_of(g));
    Result r;
    r.report["delta"] = distance_json(b.delta);
    r.report["pointset_diameter"] = distance_json(b.pointset_diameter);
    r.report["ball_diameter_ratio"] = b.ball_diameter_ratio ? Json(*b.ball_diameter_ratio) : Json(nullptr);
    r.report["jung_holds"] = b.jung_holds ? Json(*b.jung_holds) : Json(nullptr);
    r.report["far_pair_edges"] = b.gamma_edges;
    r.report["odd_girth"] = b.gamma_odd_girth ? Json(*b.gamma_odd_girth) : Json("infinity");
    r.report["regime"] = b.regime;
    r.summary = "delta " + b.delta.to_string() + ", " + b.regime;
    return r;
  });

  // embeddability
  auto* emb = app.add_subcommand("embeddability", "Largest Hamming embeddability ratio by exact LP");
  emb->add_option("--graph", graph_path, "Graph file (at most 16 vertices)")->required();
  on(emb, "embeddability", [&] {
    parameters = {{"graph", graph_path}};
    const Graph h = read_graph_file(graph_path);
    const EmbeddabilityCertificate c = max_embeddability(h);
    Result r;
    r.report["certificate"] = certificate_to_json(c, h.vertex_count());
    r.code = c.certified ? kExitOk : kExitRefuted;
    r.artifact = certificate_to_json(c, h.vertex_count()).dump(2);
    r.summary = (c.solution.unbounded ? std::string("r unbounded (") + c.solution.note + ")"
                                      : "r = " + to_string(c.solution.ratio)) +
                (c.certified ? ", certified" : ", NOT certified");
    return r;
  });

  // repro-all
  auto* repro_all = app.add_subcommand("repro-all", "Run every reproduction check");
  repro_all->add_option("--gadget", gadget_path, "Verify this gadget instead of searching");
  on(repro_all, "repro-all", [&] {
    parameters = {{"seed", g.seed}, {"gadget", gadget_path}};
    return repro(g, gadget_path, out);
  });

  try {
    std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Json report = {{"command", command}, {"version", MAXDIAM_VERSION}};
  Result result;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    result = action();
  } catch (const BudgetExceeded& e) {
    result.code = kExitBudget;
    result.report["error"] = e.what();
    result.report["nodes"] = e.nodes();
    result.summary = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    result.code = kExitUsage;
    result.report["error"] = e.what();
    result.summary = std::string("error: ") + e.what();
  }
  report["parameters"] = parameters;
  report["budget_nodes"] = g.budget;
  report["result"] = result.report;
  report["exit_code"] = result.code;
  report["verdict"] = result.code == kExitOk       ? "verified"
                      : result.code == kExitRefuted ? "refuted"
                      : result.code == kExitBudget  ? "budget_exceeded"
                                                    : "error";
  if (g.timing)
    report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (result.artifact && !g.out.empty() && command != "repro-all") {
    try {
      write_text_file(g.out, *result.artifact + (result.artifact->ends_with('\n') ? "" : "\n"));
    } catch (const std::exception& e) {
      err << "cannot write " << g.out << ": " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (g.json)
    out << report.dump(2) << "\n";
  else if (command != "repro-all" || result.code == kExitUsage)
    (result.code == kExitUsage ? err : out) << result.summary << (result.summary.ends_with('\n') ? "" : "\n");
  else
    out << result.summary << "\n";
  return result.code;
}

}  // namespace maxdiam
