#pragma once

// Largest r for which a small graph is r-embeddable into binary Hamming
// space. A binary embedding is a multiset of cut columns w in {0,1}^n; the LP
// weighs each cut by x_w, asks every edge to be cut at least r times and every
// non-edge at most once, and maximises r.

#include <optional>
#include <string>
#include <vector>

#include "maxdiam/embedding.hpp"
#include "maxdiam/graph.hpp"
#include "maxdiam/io.hpp"
#include "maxdiam/simplex.hpp"

namespace maxdiam {

inline constexpr std::size_t kEmbeddabilityMaxVertices = 16;

struct EmbeddabilityLp {
  std::size_t n = 0;
  /// Cut word per x-variable, bit v for vertex v. Variable 0 is r; variable
  /// i + 1 weighs words[i].
  std::vector<std::uint32_t> words;
  LinearProgram program;
};

/// With `canonical`, a word and its complement share one variable (the
/// representative with bit 0 clear) and the zero word is dropped; otherwise
/// every nonconstant word gets its own variable.
EmbeddabilityLp build_embeddability_lp(const Graph& g, bool canonical = true,
                                       std::size_t max_vertices = kEmbeddabilityMaxVertices);

struct EmbeddabilitySolution {
  bool unbounded = false;
  /// Set when bounded.
  Rational ratio;
  /// (word, weight) for each positive weight, in word order.
  std::vector<std::pair<std::uint32_t, Rational>> weights;
  std::string note;
};

EmbeddabilitySolution solve_embeddability(const Graph& g, const EmbeddabilityLp& lp);

/// Scales the weights by the lcm of all denominators (the ratio's included)
/// and replicates cut column w that many times. short = the scale, long =
/// ratio * scale. Throws std::logic_error when the weights violate the LP.
Embedding extract_integer_embedding(const Graph& g, const EmbeddabilitySolution& s);

struct EmbeddabilityCertificate {
  EmbeddabilitySolution solution;
  std::optional<Embedding> embedding;
  std::size_t q = 0;
  bool certified = false;
};

/// Solve, extract and verify. An unbounded result carries one indicator
/// column per component of the complement graph: non-edges land at distance
/// 0 and every edge at distance 2.
EmbeddabilityCertificate max_embeddability(const Graph& g, std::size_t max_vertices = kEmbeddabilityMaxVertices);

/// Bit string of a cut word, vertex 0 first.
std::string word_to_bits(std::uint32_t word, std::size_t n);

Json certificate_to_json(const EmbeddabilityCertificate& c, std::size_t n);

}  // namespace maxdiam
