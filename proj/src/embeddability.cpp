#include "maxdiam/embeddability.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "maxdiam/graph_algorithms.hpp"

namespace maxdiam {

namespace {

bool separates(std::uint32_t word, Vertex a, Vertex b) { return ((word >> a) & 1u) != ((word >> b) & 1u); }

// Cut weight received by the pair (a, b).
Rational pair_weight(const std::vector<std::pair<std::uint32_t, Rational>>& weights, Vertex a, Vertex b) {
  Rational s = 0;
  for (auto& [w, x] : weights)
    if (separates(w, a, b)) s += x;
  return s;
}

Graph complement(const Graph& g) {
  Graph c(g.vertex_count());
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b = a + 1; b < g.vertex_count(); ++b)
      if (!g.has_edge(a, b)) c.add_edge(a, b);
  return c;
}

// Unbounded instances: every non-edge stays inside a component of the
// complement, so one indicator column per component cuts each edge twice and
// no non-edge at all.
Embedding component_embedding(const Graph& g) {
  const auto comps = connected_components(complement(g));
  std::vector<BitVector> image(g.vertex_count(), BitVector(comps.size()));
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) image[v].set(c, true);
  return {g, TargetMetric::hamming, {image.begin(), image.end()}, BigInt(0), BigInt(1)};
}

}  // namespace

std::string word_to_bits(std::uint32_t word, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t v = 0; v < n; ++v)
    if ((word >> v) & 1u) s[v] = '1';
  return s;
}

EmbeddabilityLp build_embeddability_lp(const Graph& g, bool canonical, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices || n > 31)
    throw std::invalid_argument("build_embeddability_lp: " + std::to_string(n) + " vertices exceeds the limit of " +
                                std::to_string(std::min<std::size_t>(max_vertices, 31)));
  EmbeddabilityLp out{n, {}, LinearProgram(1)};
  out.program.objective[0] = 1;
  const std::uint32_t full = n == 0 ? 0 : (1u << n) - 1;
  for (std::uint32_t w = 1; w < full; ++w) {
    if (canonical && (w & 1u)) continue;
    out.words.push_back(w);
    out.program.add_variable();
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      std::vector<std::pair<std::size_t, std::int64_t>> row;
      const bool edge = g.has_edge(a, b);
      if (edge) row.emplace_back(0, 1);
      for (std::size_t i = 0; i < out.words.size(); ++i)
        if (separates(out.words[i], a, b)) row.emplace_back(i + 1, edge ? -1 : 1);
      out.program.add_row(row, RowSense::less_equal, edge ? 0 : 1);
    }
  return out;
}

EmbeddabilitySolution solve_embeddability(const Graph& g, const EmbeddabilityLp& lp) {
  EmbeddabilitySolution s;
  if (g.edge_count() == 0) {
    s.unbounded = true;
    s.note = "no edges";
    return s;
  }
  const LpResult res = solve_lp(lp.program);
  if (res.status == LpStatus::infeasible) throw std::logic_error("solve_embeddability: the zero solution was rejected");
  if (res.status == LpStatus::unbounded) {
    s.unbounded = true;
    s.note = "non-edges collapse: every edge crosses components of the complement";
    return s;
  }
  s.ratio = res.x[0];
  for (std::size_t i = 0; i < lp.words.size(); ++i)
    if (res.x[i + 1] > 0) s.weights.emplace_back(lp.words[i], res.x[i + 1]);
  return s;
}

Embedding extract_integer_embedding(const Graph& g, const EmbeddabilitySolution& s) {
  if (s.unbounded) throw std::invalid_argument("extract_integer_embedding: unbounded solution has no finite ratio");
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const Rational d = pair_weight(s.weights, a, b);
      if (g.has_edge(a, b) ? d < s.ratio : d > 1)
        throw std::logic_error("extract_integer_embedding: witness violates the pair " + std::to_string(a) + "-" +
                               std::to_string(b));
    }
  BigInt scale = denominator(s.ratio);
  for (auto& [w, x] : s.weights) scale = boost::integer::lcm(scale, BigInt(denominator(x)));
  std::vector<std::pair<std::uint32_t, std::size_t>> columns;
  std::size_t q = 0;
  for (auto& [w, x] : s.weights) {
    const BigInt copies = numerator(x) * (scale / denominator(x));
    if (copies > BigInt(1u << 24)) throw std::runtime_error("extract_integer_embedding: scaled dimension too large");
    columns.emplace_back(w, copies.convert_to<std::size_t>());
    q += columns.back().second;
  }
  if (q == 0) throw std::invalid_argument("extract_integer_embedding: all-zero witness gives an empty embedding");
  Embedding e{g, TargetMetric::hamming, {}, scale, numerator(s.ratio) * (scale / denominator(s.ratio))};
  for (Vertex v = 0; v < n; ++v) {
    BitVector p(q);
    std::size_t at = 0;
    for (auto& [w, copies] : columns)
      for (std::size_t c = 0; c < copies; ++c) p.set(at++, (w >> v) & 1u);
    e.image.emplace_back(std::move(p));
  }
  return e;
}

EmbeddabilityCertificate max_embeddability(const Graph& g, std::size_t max_vertices) {
  EmbeddabilityCertificate c;
  const EmbeddabilityLp lp = build_embeddability_lp(g, true, max_vertices);
  c.solution = solve_embeddability(g, lp);
  if (c.solution.unbounded) {
    c.embedding = component_embedding(g);
    const EmbeddingReport r = verify_embedding(*c.embedding);
    c.certified = r.ok && !r.achieved_ratio;
  } else {
    c.embedding = extract_integer_embedding(g, c.solution);
    const EmbeddingReport r = verify_embedding(*c.embedding);
    c.certified = r.ok && r.achieved_ratio && *r.achieved_ratio == c.solution.ratio;
  }
  if (!c.embedding->image.empty()) c.q = std::get<BitVector>(c.embedding->image[0]).size();
  return c;
}

Json certificate_to_json(const EmbeddabilityCertificate& c, std::size_t n) {
  Json x = Json::object();
  for (auto& [w, v] : c.solution.weights) x[word_to_bits(w, n)] = {numerator(v).str(), denominator(v).str()};
  Json out = {{"unbounded", c.solution.unbounded}, {"x", x}, {"q", c.q}, {"verified", c.certified}};
  if (c.solution.unbounded) {
    out["r_num"] = nullptr;
    out["r_den"] = nullptr;
    out["note"] = c.solution.note;
  } else {
    out["r_num"] = numerator(c.solution.ratio).str();
    out["r_den"] = denominator(c.solution.ratio).str();
  }
  return out;
}

}  // namespace maxdiam
