#pragma once

#include <optional>
#include <vector>

#include "maxdiam/coloring.hpp"
#include "maxdiam/graph.hpp"

namespace maxdiam {

/// Proper (max_degree + 1)-edge-coloring by Misra-Gries fan rotation.
EdgeColoring misra_gries_edge_coloring(const Graph& g);

/// A proper c-edge-coloring if one exists. c > max degree always succeeds via
/// Misra-Gries; c = max degree is decided exactly by coloring the line graph.
/// Throws BudgetExceeded when the exact search runs out of nodes.
std::optional<EdgeColoring> edge_coloring(const Graph& g, int c, const SearchOptions& options = {});

Graph line_graph(const Graph& g);

/// Color classes M_0..M_{c-1} as edge-id lists. Throws on an improper coloring.
std::vector<std::vector<EdgeId>> matching_decomposition(const Graph& g, const EdgeColoring& coloring, int c);

/// Proper 3-edge-coloring of a graph with max degree <= 3, found by removing
/// all cut edges, coloring the remaining pieces exactly, and re-adding the cut
/// edges along the bridge forest while permuting each piece's colors so the
/// cut edge can take a color free at both ends. nullopt when none exists.
std::optional<EdgeColoring> three_edge_color_via_bridge_splitting(const Graph& g, const SearchOptions& options = {});

}  // namespace maxdiam
