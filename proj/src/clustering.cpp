#include "maxdiam/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <optional>
#include <tuple>

#include "maxdiam/graph_algorithms.hpp"

namespace maxdiam {

DiameterWitness clustering_diameter(const Pointset& p, const std::vector<int>& assignment, int k) {
  if (p.empty()) throw std::invalid_argument("clustering_diameter: empty pointset");
  if (assignment.size() != p.size()) throw std::invalid_argument("clustering_diameter: assignment length mismatch");
  for (int c : assignment)
    if (c < 0 || c >= k) throw std::invalid_argument("clustering_diameter: cluster id out of range");
  DiameterWitness best{p.distance(0, 0), 0, 0};
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (assignment[a] != assignment[b]) continue;
      Distance d = p.distance(a, b);
      if (d > best.value) best = {std::move(d), a, b};
    }
  return best;
}

namespace {

Clustering finish(const Pointset& p, int k, std::vector<int> assignment) {
  Clustering c{k, std::move(assignment), {p.distance(0, 0), 0, 0}};
  c.diameter = clustering_diameter(p, c.assignment, k);
  return c;
}

// Distinct pairwise distances in increasing order, and each pair's rank.
struct DistanceRanks {
  std::vector<Distance> values;
  std::vector<std::vector<std::uint32_t>> rank;
};

DistanceRanks rank_distances(const Pointset& p) {
  const std::size_t n = p.size();
  std::vector<std::tuple<Distance, std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(n * (n - 1) / 2 + 1);
  pairs.emplace_back(p.distance(0, 0), 0, 0);
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) pairs.emplace_back(p.distance(a, b), a, b);
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
  DistanceRanks out;
  out.rank.assign(n, std::vector<std::uint32_t>(n, 0));
  for (auto& [d, a, b] : pairs) {
    if (out.values.empty() || out.values.back() < d) out.values.push_back(d);
    const auto r = static_cast<std::uint32_t>(out.values.size() - 1);
    out.rank[a][b] = out.rank[b][a] = r;
  }
  return out;
}

Graph rank_graph(const DistanceRanks& ranks, std::uint32_t limit) {
  const std::size_t n = ranks.rank.size();
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (ranks.rank[a][b] > limit) g.add_edge(a, b);
  return g;
}

// Least rank whose threshold graph passes `feasible`; the top rank always
// does since its graph is edgeless.
template <class Feasible>
std::uint32_t least_feasible_rank(const DistanceRanks& ranks, Feasible&& feasible) {
  std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(ranks.values.size() - 1);
  while (lo < hi) {
    std::uint32_t mid = lo + (hi - lo) / 2;
    if (feasible(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace

Clustering gonzalez_cluster(const Pointset& p, int k) {
  if (p.empty()) throw std::invalid_argument("gonzalez_cluster: empty pointset");
  if (k < 1) throw std::invalid_argument("gonzalez_cluster: k must be positive");
  const std::size_t n = p.size();
  std::vector<std::size_t> seeds{0};
  std::vector<Distance> nearest;
  std::vector<int> owner(n, 0);
  for (std::size_t i = 0; i < n; ++i) nearest.push_back(p.distance(i, 0));
  while (seeds.size() < static_cast<std::size_t>(k)) {
    std::size_t far = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (nearest[i] > nearest[far]) far = i;
    if (nearest[far] == p.distance(far, far)) break;  // every point is a seed already
    seeds.push_back(far);
    const int id = static_cast<int>(seeds.size() - 1);
    for (std::size_t i = 0; i < n; ++i) {
      Distance d = p.distance(i, far);
      if (d < nearest[i]) {
        nearest[i] = std::move(d);
        owner[i] = id;
      }
    }
  }
  return finish(p, k, owner);
}

Graph threshold_graph(const Pointset& p, const Distance& d) {
  Graph g(p.size());
  for (Vertex a = 0; a < p.size(); ++a)
    for (Vertex b = a + 1; b < p.size(); ++b)
      if (p.distance(a, b) > d) g.add_edge(a, b);
  return g;
}

Clustering exact_cluster(const Pointset& p, int k, const SearchOptions& options, std::size_t max_points) {
  if (p.empty()) throw std::invalid_argument("exact_cluster: empty pointset");
  if (k < 1 || k > 4) throw std::invalid_argument("exact_cluster: k must lie in [1, 4]");
  if (p.size() > max_points) throw std::invalid_argument("exact_cluster: pointset larger than the configured bound");
  const DistanceRanks ranks = rank_distances(p);
  std::uint64_t spent = 0;
  auto colorable = [&](std::uint32_t r) {
    SearchOptions opts = options;
    opts.node_budget = options.node_budget > spent ? options.node_budget - spent : 0;
    ColoringSearchResult res = find_coloring(rank_graph(ranks, r), k, opts);
    spent += res.nodes;
    if (res.status == SearchStatus::budget_exceeded) throw BudgetExceeded("exact_cluster: node budget exhausted", spent);
    return res;
  };
  const std::uint32_t best = least_feasible_rank(ranks, [&](std::uint32_t r) {
    return colorable(r).status == SearchStatus::found;
  });
  return finish(p, k, colorable(best).coloring);
}

Clustering two_cluster(const Pointset& p) {
  if (p.empty()) throw std::invalid_argument("two_cluster: empty pointset");
  const DistanceRanks ranks = rank_distances(p);
  const std::uint32_t best =
      least_feasible_rank(ranks, [&](std::uint32_t r) { return is_bipartite(rank_graph(ranks, r)); });
  const Graph g = rank_graph(ranks, best);
  std::vector<int> side(p.size(), -1);
  for (Vertex s = 0; s < p.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v))
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        }
    }
  }
  return finish(p, 2, side);
}

Json clustering_to_json(const Pointset& p, const Clustering& c) {
  Json diameter = {{"first", c.diameter.first}, {"second", c.diameter.second}, {"approx", c.diameter.value.approx()}};
  if (c.diameter.value.is_surd()) {
    const auto& s = c.diameter.value.surd_value();
    diameter["squared"] = {{"m", s.m.str()}, {"n1", s.n1.str()}, {"n2", s.n2.str()}};
  } else {
    diameter["value"] = c.diameter.value.integer_value().str();
  }
  Json out = {{"k", c.k}, {"assignment", c.assignment}, {"diameter", diameter}, {"metric", to_string(p.metric())}};
  if (!p.labels().empty())
    out["witness_labels"] = {p.labels()[c.diameter.first], p.labels()[c.diameter.second]};
  return out;
}

}  // namespace maxdiam
