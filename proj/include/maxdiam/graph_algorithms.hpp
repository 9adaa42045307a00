#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "maxdiam/graph.hpp"

namespace maxdiam {

class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vertices are the edges of J (by EdgeId); one hyperedge per vertex of J of
/// degree >= 2, listing its incident edges. Degree 0 and 1 vertices impose no
/// rainbow constraint and are skipped.
Hypergraph incidence_hypergraph(const Graph& j);

/// Bridges, sorted by edge id.
std::vector<EdgeId> cut_edges(const Graph& g);

bool is_bipartite(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Orients every edge in the direction a depth-first search first walks it
/// (tree edges downward, back edges upward). Requires a 3-regular bridgeless
/// graph; every vertex then has indegree and outdegree in {1, 2}.
Orientation dfs_orientation(const Graph& j);

/// Length of the shortest odd cycle, nullopt when bipartite.
std::optional<std::size_t> odd_girth(const Graph& g);

inline constexpr std::size_t kMaxPatternVertices = 10;

/// True iff no vertex subset of g induces a graph isomorphic to h.
bool is_induced_subgraph_free(const Graph& g, const Graph& h);

// Seeded generators for tests and the acceptance suite.

/// Erdos-Renyi G(n, p).
Graph random_gnp(std::size_t n, double p, std::mt19937_64& rng);

struct ColoredGraph {
  Graph graph;
  EdgeColoring coloring;
};

/// Union of d pairwise edge-disjoint random perfect matchings on an even
/// number of vertices, returned with the matching index as edge color. The
/// result is d-regular and class 1; with d = 3 it is bridgeless.
ColoredGraph random_matching_union(std::size_t n, int d, std::mt19937_64& rng);

}  // namespace maxdiam
