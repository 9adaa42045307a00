#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace maxdiam {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph. Edge ids are dense and follow insertion order;
/// stored edges are normalised so that u < v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  EdgeId add_edge(Vertex u, Vertex v);
  Vertex add_vertex();

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Incidence>& incidences(Vertex v) const { return adjacency_.at(v); }
  std::vector<Vertex> neighbors(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  /// Throws when absent.
  EdgeId edge_id(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  bool is_regular(std::size_t d) const;

  /// Subgraph induced by keeping only the listed edges (same vertex set).
  Graph edge_subgraph(std::span<const EdgeId> keep) const;

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<Edge> edges_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}
  Hypergraph(std::size_t vertex_count, std::vector<std::vector<Vertex>> hyperedges);

  void add_hyperedge(std::vector<Vertex> members);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<std::vector<Vertex>>& hyperedges() const { return hyperedges_; }
  bool is_uniform(std::size_t size) const;
  bool is_regular(std::size_t degree) const;
  /// Graph whose edges join every pair of vertices sharing a hyperedge;
  /// rainbow colorings of the hypergraph are exactly its proper colorings.
  Graph primal_graph() const;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Vertex>> hyperedges_;
};

/// Per-vertex colors in [0, k).
using Coloring = std::vector<int>;
/// Per-edge colors in [0, c), indexed by EdgeId.
using EdgeColoring = std::vector<int>;

/// Directed copy of each edge, indexed by EdgeId: (tail, head).
struct Orientation {
  std::vector<std::pair<Vertex, Vertex>> arcs;

  std::vector<std::size_t> indegrees(std::size_t vertex_count) const;
  std::vector<std::size_t> outdegrees(std::size_t vertex_count) const;
};

bool is_proper_coloring(const Graph& g, const Coloring& colors, int k);
bool is_proper_edge_coloring(const Graph& g, const EdgeColoring& colors, int c);

/// Common test and example graphs.
namespace named {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();
/// Chvatal graph with the standard labelling 0..11.
Graph chvatal();
}  // namespace named

}  // namespace maxdiam
