#include "maxdiam/edge_coloring.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "maxdiam/graph_algorithms.hpp"

namespace maxdiam {

namespace {

class MisraGries {
 public:
  explicit MisraGries(const Graph& g) : g_(g), colors_(static_cast<int>(g.max_degree()) + 1), c_(g.edge_count(), -1) {}

  EdgeColoring run() {
    for (EdgeId e = 0; e < g_.edge_count(); ++e) color_edge(g_.edge(e).u, g_.edge(e).v);
    if (!is_proper_edge_coloring(g_, c_, colors_)) throw std::logic_error("misra_gries: produced an improper coloring");
    return c_;
  }

 private:
  int color_of(Vertex a, Vertex b) const { return c_[g_.edge_id(a, b)]; }

  bool is_free(Vertex v, int color) const {
    for (const auto& inc : g_.incidences(v))
      if (c_[inc.edge] == color) return false;
    return true;
  }

  int some_free(Vertex v) const {
    for (int color = 0; color < colors_; ++color)
      if (is_free(v, color)) return color;
    throw std::logic_error("misra_gries: no free color");
  }

  // Neighbor of v along an edge of the given color, if any.
  std::optional<std::pair<Vertex, EdgeId>> along(Vertex v, int color) const {
    for (const auto& inc : g_.incidences(v))
      if (c_[inc.edge] == color) return std::make_pair(inc.neighbor, inc.edge);
    return std::nullopt;
  }

  bool is_fan_prefix(Vertex u, const std::vector<Vertex>& fan, std::size_t last) const {
    for (std::size_t i = 1; i <= last; ++i) {
      int ci = color_of(u, fan[i]);
      if (ci < 0 || !is_free(fan[i - 1], ci)) return false;
    }
    return true;
  }

  void color_edge(Vertex u, Vertex v) {
    // Maximal fan of u starting at v.
    std::vector<Vertex> fan{v};
    std::vector<bool> in_fan(g_.vertex_count(), false);
    in_fan[v] = true;
    for (bool grown = true; grown;) {
      grown = false;
      for (const auto& inc : g_.incidences(u)) {
        int ci = c_[inc.edge];
        if (in_fan[inc.neighbor] || ci < 0 || !is_free(fan.back(), ci)) continue;
        fan.push_back(inc.neighbor);
        in_fan[inc.neighbor] = true;
        grown = true;
        break;
      }
    }
    const int c = some_free(u);
    const int d = some_free(fan.back());

    // Invert the cd-path starting at u (it starts with a d edge since c is free at u).
    std::vector<EdgeId> path;
    Vertex at = u;
    int want = d;
    std::vector<bool> on_path(g_.edge_count(), false);
    while (auto step = along(at, want)) {
      if (on_path[step->second]) break;
      on_path[step->second] = true;
      path.push_back(step->second);
      at = step->first;
      want = want == d ? c : d;
    }
    for (EdgeId e : path) c_[e] = c_[e] == d ? c : d;

    // First fan vertex w with d free whose prefix is still a fan.
    std::size_t w = fan.size();
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (is_free(fan[i], d) && is_fan_prefix(u, fan, i)) {
        w = i;
        break;
      }
    }
    if (w == fan.size()) throw std::logic_error("misra_gries: no rotatable fan prefix");
    for (std::size_t i = 0; i < w; ++i) c_[g_.edge_id(u, fan[i])] = color_of(u, fan[i + 1]);
    c_[g_.edge_id(u, fan[w])] = d;
  }

  const Graph& g_;
  int colors_;
  EdgeColoring c_;
};

}  // namespace

EdgeColoring misra_gries_edge_coloring(const Graph& g) { return MisraGries(g).run(); }

Graph line_graph(const Graph& g) {
  Graph out(g.edge_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& incs = g.incidences(v);
    for (std::size_t a = 0; a < incs.size(); ++a)
      for (std::size_t b = a + 1; b < incs.size(); ++b)
        if (!out.has_edge(incs[a].edge, incs[b].edge)) out.add_edge(incs[a].edge, incs[b].edge);
  }
  return out;
}

std::optional<EdgeColoring> edge_coloring(const Graph& g, int c, const SearchOptions& options) {
  if (c < 1) throw std::invalid_argument("edge_coloring: c must be positive");
  if (g.edge_count() == 0) return EdgeColoring{};
  const int delta = static_cast<int>(g.max_degree());
  if (c < delta) return std::nullopt;
  if (c > delta) return misra_gries_edge_coloring(g);
  ColoringSearchResult r = find_coloring(line_graph(g), c, options);
  if (r.status == SearchStatus::budget_exceeded) throw BudgetExceeded("edge_coloring: node budget exhausted", r.nodes);
  if (r.status == SearchStatus::none) return std::nullopt;
  return r.coloring;
}

std::vector<std::vector<EdgeId>> matching_decomposition(const Graph& g, const EdgeColoring& coloring, int c) {
  if (!is_proper_edge_coloring(g, coloring, c)) throw std::invalid_argument("matching_decomposition: improper coloring");
  std::vector<std::vector<EdgeId>> out(static_cast<std::size_t>(c));
  for (EdgeId e = 0; e < g.edge_count(); ++e) out[coloring[e]].push_back(e);
  return out;
}

std::optional<EdgeColoring> three_edge_color_via_bridge_splitting(const Graph& g, const SearchOptions& options) {
  if (g.max_degree() > 3) throw PreconditionViolation("three_edge_color_via_bridge_splitting: max degree exceeds 3");
  const std::vector<EdgeId> bridges = cut_edges(g);
  std::vector<bool> is_bridge(g.edge_count(), false);
  for (EdgeId e : bridges) is_bridge[e] = true;

  // Pieces: connected components after deleting every bridge.
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!is_bridge[e]) kept.push_back(e);
  Graph rest = g.edge_subgraph(kept);
  std::vector<int> piece(g.vertex_count(), -1);
  auto pieces = connected_components(rest);
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (Vertex v : pieces[p]) piece[v] = static_cast<int>(p);

  std::vector<std::vector<EdgeId>> piece_edges(pieces.size());
  for (EdgeId e : kept) piece_edges[piece[g.edge(e).u]].push_back(e);

  EdgeColoring out(g.edge_count(), -1);
  std::uint64_t remaining = options.node_budget;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    std::vector<Vertex> local(g.vertex_count(), ~Vertex(0));
    for (std::size_t i = 0; i < pieces[p].size(); ++i) local[pieces[p][i]] = Vertex(i);
    Graph sub(pieces[p].size());
    const std::vector<EdgeId>& global = piece_edges[p];
    for (EdgeId e : global) sub.add_edge(local[g.edge(e).u], local[g.edge(e).v]);
    SearchOptions piece_options = options;
    piece_options.node_budget = remaining;
    ColoringSearchResult r = find_coloring(line_graph(sub), 3, piece_options);
    if (r.status == SearchStatus::budget_exceeded)
      throw BudgetExceeded("three_edge_color_via_bridge_splitting: node budget exhausted", options.node_budget);
    remaining -= std::min(remaining, r.nodes);
    if (r.status == SearchStatus::none) return std::nullopt;
    for (std::size_t i = 0; i < global.size(); ++i) out[global[i]] = r.coloring[i];
  }

  // Walk the bridge forest from each root piece; a child piece is recolored
  // by a permutation so the bridge color is free at both of its ends.
  auto used_at = [&](Vertex v) {
    std::array<bool, 3> used{};
    for (const auto& inc : g.incidences(v))
      if (out[inc.edge] >= 0) used[out[inc.edge]] = true;
    return used;
  };
  std::vector<bool> placed(pieces.size(), false);
  for (std::size_t root = 0; root < pieces.size(); ++root) {
    if (placed[root]) continue;
    placed[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t p = queue.front();
      queue.pop_front();
      for (Vertex u : pieces[p]) {
        for (const auto& inc : g.incidences(u)) {
          if (!is_bridge[inc.edge] || out[inc.edge] >= 0) continue;
          Vertex v = inc.neighbor;
          std::size_t child = static_cast<std::size_t>(piece[v]);
          auto at_u = used_at(u);
          auto at_v = used_at(v);
          int cu = int(std::find(at_u.begin(), at_u.end(), false) - at_u.begin());
          int cv = int(std::find(at_v.begin(), at_v.end(), false) - at_v.begin());
          if (cu == 3 || cv == 3) throw std::logic_error("bridge splitting: no free color at a bridge end");
          std::array<int, 3> perm{0, 1, 2};
          std::swap(perm[cv], perm[cu]);
          for (EdgeId e : piece_edges[child]) out[e] = perm[out[e]];
          out[inc.edge] = cu;
          placed[child] = true;
          queue.push_back(child);
        }
      }
    }
  }
  if (!is_proper_edge_coloring(g, out, 3)) throw std::logic_error("bridge splitting: merged coloring is improper");
  return out;
}

}  // namespace maxdiam
