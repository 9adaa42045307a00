#include "maxdiam/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace maxdiam {

Hypergraph incidence_hypergraph(const Graph& j) {
  Hypergraph h(j.edge_count());
  for (Vertex v = 0; v < j.vertex_count(); ++v) {
    if (j.degree(v) < 2) continue;
    std::vector<Vertex> members;
    for (const auto& inc : j.incidences(v)) members.push_back(inc.edge);
    h.add_hyperedge(std::move(members));
  }
  return h;
}

std::vector<EdgeId> cut_edges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t kUnseen = ~std::size_t(0);
  std::vector<std::size_t> order(n, kUnseen), low(n, 0);
  std::vector<EdgeId> out;
  std::size_t clock = 0;

  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, ~EdgeId(0), 0}};
    order[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& incs = g.incidences(f.v);
      if (f.next < incs.size()) {
        const Incidence inc = incs[f.next++];
        if (inc.edge == f.via) continue;
        if (order[inc.neighbor] == kUnseen) {
          order[inc.neighbor] = low[inc.neighbor] = clock++;
          stack.push_back({inc.neighbor, inc.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], order[inc.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] > order[parent]) out.push_back(done.via);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Two-coloring by BFS; nullopt when an odd cycle exists.
std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (const auto& inc : g.incidences(v)) {
        if (side[inc.neighbor] < 0) {
          side[inc.neighbor] = 1 - side[v];
          queue.push_back(inc.neighbor);
        } else if (side[inc.neighbor] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace

bool is_bipartite(const Graph& g) { return two_color(g).has_value(); }

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    comp[s] = static_cast<int>(out.size() - 1);
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (const auto& inc : g.incidences(v)) {
        if (comp[inc.neighbor] >= 0) continue;
        comp[inc.neighbor] = comp[s];
        stack.push_back(inc.neighbor);
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

Orientation dfs_orientation(const Graph& j) {
  if (!j.is_regular(3)) throw PreconditionViolation("dfs_orientation: graph is not 3-regular");
  if (!cut_edges(j).empty()) throw PreconditionViolation("dfs_orientation: graph has a cut edge");

  Orientation out;
  out.arcs.assign(j.edge_count(), {0, 0});
  std::vector<bool> oriented(j.edge_count(), false), seen(j.vertex_count(), false);
  for (Vertex root = 0; root < j.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& incs = j.incidences(v);
      if (next == incs.size()) {
        stack.pop_back();
        continue;
      }
      const Incidence inc = incs[next++];
      if (oriented[inc.edge]) continue;
      oriented[inc.edge] = true;
      out.arcs[inc.edge] = {v, inc.neighbor};
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = true;
        stack.emplace_back(inc.neighbor, 0);
      }
    }
  }
  auto in = out.indegrees(j.vertex_count());
  auto outd = out.outdegrees(j.vertex_count());
  for (Vertex v = 0; v < j.vertex_count(); ++v)
    if (in[v] == 0 || outd[v] == 0) throw std::logic_error("dfs_orientation: vertex with in- or outdegree 3");
  return out;
}

std::optional<std::size_t> odd_girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<std::size_t> best;
  constexpr std::size_t kFar = ~std::size_t(0);
  // BFS in the bipartite double cover: state (v, parity). The distance from
  // (s, 0) to (s, 1) is the shortest odd closed walk through s, and the
  // shortest odd closed walk overall is a shortest odd cycle.
  std::vector<std::size_t> dist(2 * n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kFar);
    dist[2 * s] = 0;
    std::deque<std::size_t> queue{2 * std::size_t(s)};
    while (!queue.empty()) {
      std::size_t state = queue.front();
      queue.pop_front();
      if (best && dist[state] + 1 >= *best) break;
      Vertex v = Vertex(state / 2);
      std::size_t parity = state % 2;
      for (const auto& inc : g.incidences(v)) {
        std::size_t next = 2 * std::size_t(inc.neighbor) + (1 - parity);
        if (dist[next] != kFar) continue;
        dist[next] = dist[state] + 1;
        queue.push_back(next);
      }
    }
    if (dist[2 * s + 1] != kFar && (!best || dist[2 * s + 1] < *best)) best = dist[2 * s + 1];
  }
  return best;
}

namespace {

class InducedSearch {
 public:
  InducedSearch(const Graph& g, const Graph& h) : g_(g), h_(h) {
    // Place pattern vertices in BFS order so each new vertex usually has an
    // already placed neighbor to anchor the candidates.
    std::vector<bool> placed(h.vertex_count(), false);
    for (Vertex s = 0; s < h.vertex_count(); ++s) {
      if (placed[s]) continue;
      placed[s] = true;
      std::deque<Vertex> queue{s};
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (Vertex w : h.neighbors(v))
          if (!placed[w]) {
            placed[w] = true;
            queue.push_back(w);
          }
      }
    }
    image_.assign(h.vertex_count(), 0);
    used_.assign(g.vertex_count(), false);
  }

  bool found() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex hv = order_[depth];
    for (Vertex gv = 0; gv < g_.vertex_count(); ++gv) {
      if (used_[gv] || g_.degree(gv) < h_.degree(hv)) continue;
      bool consistent = true;
      for (std::size_t d = 0; d < depth && consistent; ++d) {
        Vertex hw = order_[d];
        consistent = h_.has_edge(hv, hw) == g_.has_edge(gv, image_[hw]);
      }
      if (!consistent) continue;
      image_[hv] = gv;
      used_[gv] = true;
      if (extend(depth + 1)) return true;
      used_[gv] = false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace

bool is_induced_subgraph_free(const Graph& g, const Graph& h) {
  if (h.vertex_count() > kMaxPatternVertices)
    throw std::invalid_argument("is_induced_subgraph_free: pattern has more than 10 vertices");
  if (h.vertex_count() > g.vertex_count()) return true;
  return !InducedSearch(g, h).found();
}

Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(Vertex(u), Vertex(v));
  return g;
}

ColoredGraph random_matching_union(std::size_t n, int d, std::mt19937_64& rng) {
  if (n % 2 != 0 || d < 1 || static_cast<std::size_t>(d) >= n)
    throw std::invalid_argument("random_matching_union: need even n > d >= 1");
  // Rejection sampling: draw d matchings at once and retry on any overlap.
  for (;;) {
    ColoredGraph out{Graph(n), {}};
    bool clash = false;
    for (int c = 0; c < d && !clash; ++c) {
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), Vertex(0));
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < n; i += 2) {
        if (out.graph.has_edge(perm[i], perm[i + 1])) {
          clash = true;
          break;
        }
        out.graph.add_edge(perm[i], perm[i + 1]);
        out.coloring.push_back(c);
      }
    }
    if (!clash) return out;
  }
}

}  // namespace maxdiam
