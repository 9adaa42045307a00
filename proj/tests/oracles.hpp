#pragma once

// Slow reference implementations used only to check the library. They share
// no code with the algorithms under test beyond the Graph and Pointset types.

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "maxdiam/geometry.hpp"
#include "maxdiam/graph.hpp"

namespace oracle {

using maxdiam::Graph;
using maxdiam::Vertex;

inline bool proper(const Graph& g, const std::vector<int>& c) {
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

/// Counts proper k-colorings by trying all k^n assignments.
inline std::uint64_t count_colorings(const Graph& g, int k) {
  const std::size_t n = g.vertex_count();
  std::vector<int> c(n, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (proper(g, c)) ++count;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return count;
  }
}

/// Tries all k^m edge colorings.
inline bool edge_colorable(const Graph& g, int k) {
  const std::size_t m = g.edge_count();
  std::vector<int> c(m, 0);
  for (;;) {
    bool ok = true;
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
      std::vector<bool> seen(k, false);
      for (const auto& inc : g.incidences(v)) {
        if (seen[c[inc.edge]]) ok = false;
        seen[c[inc.edge]] = true;
      }
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && ++c[i] == k) c[i++] = 0;
    if (i == m) return false;
  }
}

inline bool connected_without(const Graph& g, Vertex s, Vertex t, std::size_t skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{s};
  seen[s] = true;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incidences(v)) {
      if (inc.edge == skip || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = true;
      queue.push_back(inc.neighbor);
    }
  }
  return seen[t];
}

/// Bridges found by deleting each edge in turn.
inline std::vector<std::size_t> bridges_by_deletion(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!connected_without(g, g.edge(e).u, g.edge(e).v, e)) out.push_back(e);
  return out;
}

/// Shortest odd closed walk, found by tracking which vertices each start can
/// reach in exactly L steps. It equals the odd girth.
inline std::optional<std::size_t> odd_girth_by_walks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) reach[v][v] = true;
  for (std::size_t len = 1; len <= 2 * n + 1; ++len) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (Vertex s = 0; s < n; ++s)
      for (Vertex v = 0; v < n; ++v)
        if (reach[s][v])
          for (Vertex w : g.neighbors(v)) next[s][w] = true;
    reach = std::move(next);
    if (len % 2 == 1)
      for (Vertex s = 0; s < n; ++s)
        if (reach[s][s]) return len;
  }
  return std::nullopt;
}

/// Plain backtracking over edges in id order.
inline bool edge_colorable_backtrack(const Graph& g, int k) {
  std::vector<int> c(g.edge_count(), -1);
  std::function<bool(std::size_t)> rec = [&](std::size_t e) {
    if (e == g.edge_count()) return true;
    for (int color = 0; color < k; ++color) {
      bool clash = false;
      for (Vertex end : {g.edge(e).u, g.edge(e).v})
        for (const auto& inc : g.incidences(end))
          if (inc.edge != e && c[inc.edge] == color) clash = true;
      if (clash) continue;
      c[e] = color;
      if (rec(e + 1)) return true;
      c[e] = -1;
    }
    return false;
  };
  return rec(0);
}

/// Every labelled simple cubic graph on n vertices.
inline std::vector<Graph> all_cubic_graphs(std::size_t n) {
  std::vector<Graph> out;
  std::vector<std::vector<Vertex>> adj(n);
  std::function<void()> rec = [&] {
    Vertex v = 0;
    while (v < n && adj[v].size() == 3) ++v;
    if (v == n) {
      Graph g(n);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b : adj[a])
          if (a < b) g.add_edge(a, b);
      out.push_back(g);
      return;
    }
    // Neighbours of v are added in increasing order, so each graph is built once.
    const Vertex from = adj[v].empty() ? 0 : adj[v].back() + 1;
    for (Vertex w = std::max<Vertex>(from, v + 1); w < n; ++w) {
      if (adj[w].size() == 3) continue;
      bool present = false;
      for (Vertex x : adj[v]) present = present || x == w;
      if (present) continue;
      adj[v].push_back(w);
      adj[w].push_back(v);
      rec();
      adj[v].pop_back();
      adj[w].pop_back();
    }
  };
  if (n % 2 == 0) rec();
  return out;
}

/// Random simple cubic graph from the pairing model, retried until simple.
inline Graph random_cubic(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < 3; ++i) points.push_back(v);
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      if (points[i] == points[i + 1] || g.has_edge(points[i], points[i + 1]))
        simple = false;
      else
        g.add_edge(points[i], points[i + 1]);
    }
    if (simple) return g;
  }
}

/// Checks every vertex subset of size |H| and every bijection onto H.
inline bool induced_free_by_subsets(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count(), m = h.vertex_count();
  if (m > n) return true;
  std::vector<Vertex> pick;
  std::function<bool(Vertex)> choose = [&](Vertex from) -> bool {
    if (pick.size() == m) {
      std::vector<Vertex> perm = pick;
      std::sort(perm.begin(), perm.end());
      do {
        bool same = true;
        for (Vertex a = 0; a < m && same; ++a)
          for (Vertex b = a + 1; b < m && same; ++b)
            if (g.has_edge(perm[a], perm[b]) != h.has_edge(a, b)) same = false;
        if (same) return false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      return true;
    }
    for (Vertex v = from; v < n; ++v) {
      pick.push_back(v);
      if (!choose(v + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  return choose(0);
}

inline bool bipartite_by_enumeration(const Graph& g) { return count_colorings(g, 2) > 0; }

/// Optimal k-clustering diameter over all k^n assignments.
inline maxdiam::Distance exhaustive_optimum(const maxdiam::Pointset& p, int k) {
  const std::size_t n = p.size();
  std::vector<std::vector<maxdiam::Distance>> d(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d[a].push_back(p.distance(a, b));
  std::optional<maxdiam::Distance> best;
  std::vector<int> c(n, 0);
  for (;;) {
    const maxdiam::Distance* worst = &d[0][0];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (c[a] == c[b] && d[a][b] > *worst) worst = &d[a][b];
    if (!best || *worst < *best) best = *worst;
    std::size_t i = 0;
    while (i < n && ++c[i] == k) c[i++] = 0;
    if (i == n) return *best;
  }
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

inline maxdiam::Pointset random_bits(std::size_t count, std::size_t dim, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  maxdiam::Pointset p(maxdiam::Metric::hamming, dim);
  for (std::size_t i = 0; i < count; ++i) {
    maxdiam::BitVector b(dim);
    for (std::size_t c = 0; c < dim; ++c) b.set(c, coin(rng));
    p.add(b);
  }
  return p;
}

inline maxdiam::Pointset random_ints(maxdiam::Metric m, std::size_t count, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  maxdiam::Pointset p(m, dim);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> v(dim);
    for (auto& x : v) x = coord(rng);
    p.add(maxdiam::IntVector(v));
  }
  return p;
}

}  // namespace oracle
