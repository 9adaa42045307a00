#include "maxdiam/graph.hpp"

#include <algorithm>

namespace maxdiam {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t(u) << 32) | v;
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
  if (u >= vertex_count() || v >= vertex_count())
    throw std::out_of_range("Graph: edge endpoint out of range");
  if (!edge_keys_.insert(key(u, v)).second)
    throw std::invalid_argument("Graph: duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

Vertex Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<Vertex>(adjacency_.size() - 1);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for (const auto& inc : adjacency_.at(v)) out.push_back(inc.neighbor);
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const { return u != v && edge_keys_.count(key(u, v)) > 0; }

EdgeId Graph::edge_id(Vertex u, Vertex v) const {
  for (const auto& inc : adjacency_.at(u))
    if (inc.neighbor == v) return inc.edge;
  throw std::out_of_range("Graph: no edge " + std::to_string(u) + "-" + std::to_string(v));
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, adj.size());
  return best;
}

bool Graph::is_regular(std::size_t d) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [d](const auto& a) { return a.size() == d; });
}

Graph Graph::edge_subgraph(std::span<const EdgeId> keep) const {
  Graph out(vertex_count());
  for (EdgeId e : keep) out.add_edge(edges_.at(e).u, edges_.at(e).v);
  return out;
}

// ---------------------------------------------------------------- Hypergraph

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> hyperedges)
    : vertex_count_(vertex_count) {
  for (auto& e : hyperedges) add_hyperedge(std::move(e));
}

void Hypergraph::add_hyperedge(std::vector<Vertex> members) {
  std::vector<Vertex> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("Hypergraph: repeated vertex inside a hyperedge");
  if (members.size() < 2) throw std::invalid_argument("Hypergraph: hyperedges need at least two vertices");
  for (Vertex v : members)
    if (v >= vertex_count_) throw std::out_of_range("Hypergraph: vertex out of range");
  hyperedges_.push_back(std::move(members));
}

bool Hypergraph::is_uniform(std::size_t size) const {
  return std::all_of(hyperedges_.begin(), hyperedges_.end(), [size](const auto& e) { return e.size() == size; });
}

bool Hypergraph::is_regular(std::size_t degree) const {
  std::vector<std::size_t> count(vertex_count_, 0);
  for (const auto& e : hyperedges_)
    for (Vertex v : e) ++count[v];
  return std::all_of(count.begin(), count.end(), [degree](std::size_t c) { return c == degree; });
}

Graph Hypergraph::primal_graph() const {
  Graph g(vertex_count_);
  for (const auto& e : hyperedges_)
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        if (!g.has_edge(e[a], e[b])) g.add_edge(e[a], e[b]);
  return g;
}

// ---------------------------------------------------------------- orientation

std::vector<std::size_t> Orientation::indegrees(std::size_t vertex_count) const {
  std::vector<std::size_t> d(vertex_count, 0);
  for (auto& [tail, head] : arcs) ++d[head];
  return d;
}

std::vector<std::size_t> Orientation::outdegrees(std::size_t vertex_count) const {
  std::vector<std::size_t> d(vertex_count, 0);
  for (auto& [tail, head] : arcs) ++d[tail];
  return d;
}

bool is_proper_coloring(const Graph& g, const Coloring& colors, int k) {
  if (colors.size() != g.vertex_count()) return false;
  for (int c : colors)
    if (c < 0 || c >= k) return false;
  for (const Edge& e : g.edges())
    if (colors[e.u] == colors[e.v]) return false;
  return true;
}

bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& colors, int c) {
  if (colors.size() != g.edge_count()) return false;
  for (int x : colors)
    if (x < 0 || x >= c) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> seen(static_cast<std::size_t>(c), false);
    for (const auto& inc : g.incidences(v)) {
      if (seen[colors[inc.edge]]) return false;
      seen[colors[inc.edge]] = true;
    }
  }
  return true;
}

namespace named {

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(Vertex(i), Vertex(i + 1));
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(Vertex(n - 1), 0);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(Vertex(i), Vertex(j));
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(Vertex(i), Vertex(a + j));
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, 5 + (i + 2) % 5);
  }
  return g;
}

Graph chvatal() {
  static constexpr Edge kEdges[] = {{0, 1}, {0, 4}, {0, 6},  {0, 9},  {1, 2},  {1, 5},  {1, 7},  {2, 3},
                                    {2, 6}, {2, 8}, {3, 4},  {3, 7},  {3, 9},  {4, 5},  {4, 8},  {5, 10},
                                    {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11}};
  return Graph(12, kEdges);
}

}  // namespace named

}  // namespace maxdiam
