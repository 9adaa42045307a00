#include "maxdiam/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "maxdiam/edge_coloring.hpp"

namespace maxdiam {

std::size_t next_power_of_two(std::size_t n) {
  std::size_t q = 1;
  while (q < n) q *= 2;
  return q;
}

std::vector<BitVector> HadamardCode::all_words() const {
  std::vector<BitVector> out = plus_words;
  out.insert(out.end(), minus_words.begin(), minus_words.end());
  return out;
}

HadamardCode hadamard_code(std::size_t q) {
  if (q == 0 || (q & (q - 1)) != 0) throw std::invalid_argument("hadamard_code: q must be a power of two");
  std::vector<BitVector> words{BitVector(1)};
  for (std::size_t len = 1; len < q; len *= 2) {
    std::vector<BitVector> next;
    for (const auto& x : words) next.push_back(x.concat(x));
    for (const auto& x : words) next.push_back(x.concat(x.complement()));
    words = std::move(next);
  }
  HadamardCode code{q, words, {}};
  for (const auto& w : code.plus_words) code.minus_words.push_back(w.complement());
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (2 * hamming_distance(code.plus_words[a], code.plus_words[b]) != q)
        throw std::logic_error("hadamard_code: plus words not at distance q/2");
  return code;
}

std::string to_string(TargetMetric m) {
  switch (m) {
    case TargetMetric::hamming: return "hamming";
    case TargetMetric::l1_int: return "l1_int";
    case TargetMetric::linf_int: return "linf_int";
    case TargetMetric::l2_binary: return "l2_binary";
  }
  return "?";
}

TargetMetric target_metric_from_string(std::string_view name) {
  for (auto m : {TargetMetric::hamming, TargetMetric::l1_int, TargetMetric::linf_int, TargetMetric::l2_binary})
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown embedding metric '" + std::string(name) + "'");
}

BigInt embedding_distance(const Embedding& e, Vertex u, Vertex v) {
  const Point& a = e.image.at(u);
  const Point& b = e.image.at(v);
  switch (e.metric) {
    case TargetMetric::hamming:
    case TargetMetric::l2_binary: return BigInt(hamming_distance(std::get<BitVector>(a), std::get<BitVector>(b)));
    case TargetMetric::l1_int: return l1_distance(std::get<IntVector>(a), std::get<IntVector>(b));
    case TargetMetric::linf_int: return linf_distance(std::get<IntVector>(a), std::get<IntVector>(b));
  }
  throw std::logic_error("unreachable");
}

namespace {

void check_image(const Embedding& e) {
  if (e.image.size() != e.source.vertex_count())
    throw std::invalid_argument("embedding: image does not cover every vertex");
  const bool binary = e.metric == TargetMetric::hamming || e.metric == TargetMetric::l2_binary;
  std::optional<std::size_t> dim;
  for (const Point& p : e.image) {
    std::size_t d;
    if (binary) {
      auto* b = std::get_if<BitVector>(&p);
      if (!b) throw std::invalid_argument("embedding: binary metric needs bit-vector images");
      d = b->size();
    } else {
      auto* v = std::get_if<IntVector>(&p);
      if (!v) throw std::invalid_argument("embedding: integer metric needs integer-vector images");
      d = v->dimension();
    }
    if (dim && *dim != d) throw DimensionMismatch("embedding: images differ in dimension");
    dim = d;
  }
}

}  // namespace

EmbeddingReport verify_embedding(const Embedding& e) {
  check_image(e);
  EmbeddingReport r;
  r.ratio_is_squared = e.metric == TargetMetric::l2_binary;
  const std::size_t n = e.source.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      BigInt d = embedding_distance(e, u, v);
      if (e.source.has_edge(u, v)) {
        if (d < e.long_value)
          r.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " at " + d.str());
        if (!r.worst_edge || d < r.worst_edge->distance) r.worst_edge = PairWitness{u, v, d};
      } else {
        if (d > e.short_value)
          r.violations.push_back("non-edge " + std::to_string(u) + "-" + std::to_string(v) + " at " + d.str());
        if (!r.worst_nonedge || d > r.worst_nonedge->distance) r.worst_nonedge = PairWitness{u, v, d};
      }
    }
  }
  r.ok = r.violations.empty();
  if (r.worst_edge && r.worst_nonedge && r.worst_nonedge->distance > 0)
    r.achieved_ratio = Rational(r.worst_edge->distance, r.worst_nonedge->distance);
  return r;
}

Embedding linf_embedding(const Graph& g) {
  const std::size_t n = g.vertex_count();
  Embedding e{g, TargetMetric::linf_int, {}, 1, 2};
  for (Vertex u = 0; u < n; ++u) {
    std::vector<std::int64_t> p(n, 1);
    p[u] = 2;
    for (Vertex v : g.neighbors(u)) p[v] = 0;
    e.image.emplace_back(IntVector(std::move(p)));
  }
  return e;
}

Embedding five_fourths_embedding(const Graph& g, const EdgeColoring& coloring) {
  auto matchings = matching_decomposition(g, coloring, 4);
  const std::size_t n = g.vertex_count();
  const std::size_t q = next_power_of_two(std::max<std::size_t>(n, 2));
  const HadamardCode code = hadamard_code(q);

  std::vector<std::vector<BitVector>> blocks(n);
  for (const auto& matching : matchings) {
    std::vector<std::optional<BitVector>> word(n);
    std::size_t next = 0;
    // Allocation in vertex order; a matched pair is served when its smaller
    // endpoint comes up.
    std::vector<std::optional<Vertex>> mate(n);
    for (EdgeId id : matching) {
      mate[g.edge(id).u] = g.edge(id).v;
      mate[g.edge(id).v] = g.edge(id).u;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (word[v]) continue;
      word[v] = code.plus_words[next++];
      if (mate[v]) word[*mate[v]] = word[v]->complement();
    }
    for (Vertex v = 0; v < n; ++v) blocks[v].push_back(*word[v]);
  }
  Embedding e{g, TargetMetric::hamming, {}, BigInt(2 * q), BigInt(5 * q / 2)};
  for (Vertex v = 0; v < n; ++v) {
    BitVector p = blocks[v][0];
    for (int b = 1; b < 4; ++b) p = p.concat(blocks[v][b]);
    e.image.emplace_back(std::move(p));
  }
  return e;
}

Embedding l2_transfer(const Embedding& e) {
  if (e.metric != TargetMetric::hamming)
    throw std::invalid_argument("l2_transfer: source must be a binary Hamming embedding");
  check_image(e);
  Embedding out = e;
  out.metric = TargetMetric::l2_binary;
  return out;
}

Json embedding_to_json(const Embedding& e) {
  Json image = Json::object();
  for (std::size_t v = 0; v < e.image.size(); ++v) image[std::to_string(v)] = point_to_json(e.image[v]);
  return {{"graph", graph_to_json(e.source)},
          {"metric", to_string(e.metric)},
          {"short", e.short_value.str()},
          {"long", e.long_value.str()},
          {"image", image}};
}

Embedding embedding_from_json(const Json& j) {
  try {
    Embedding e;
    e.source = graph_from_json(j.at("graph"));
    e.metric = target_metric_from_string(j.at("metric").get<std::string>());
    e.short_value = BigInt(j.at("short").get<std::string>());
    e.long_value = BigInt(j.at("long").get<std::string>());
    const Metric point_metric =
        (e.metric == TargetMetric::hamming || e.metric == TargetMetric::l2_binary) ? Metric::hamming : Metric::l1_int;
    for (std::size_t v = 0; v < e.source.vertex_count(); ++v)
      e.image.push_back(point_from_json(point_metric, j.at("image").at(std::to_string(v))));
    return e;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("malformed embedding: ") + ex.what());
  } catch (const std::runtime_error& ex) {
    throw FormatError(std::string("malformed embedding: ") + ex.what());
  }
}

Json report_to_json(const EmbeddingReport& r) {
  auto pair = [](const std::optional<PairWitness>& w) -> Json {
    if (!w) return nullptr;
    return {{"u", w->u}, {"v", w->v}, {"distance", w->distance.str()}};
  };
  Json ratio = nullptr;
  if (r.achieved_ratio) {
    ratio = {{"num", numerator(*r.achieved_ratio).str()},
             {"den", denominator(*r.achieved_ratio).str()},
             {"approx", r.ratio_is_squared ? std::sqrt(r.achieved_ratio->convert_to<double>())
                                           : r.achieved_ratio->convert_to<double>()}};
  }
  return {{"ok", r.ok},
          {"worst_edge_pair", pair(r.worst_edge)},
          {"worst_nonedge_pair", pair(r.worst_nonedge)},
          {"achieved_ratio", ratio},
          {"ratio_is_squared", r.ratio_is_squared},
          {"violations", r.violations}};
}

}  // namespace maxdiam
