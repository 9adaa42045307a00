#pragma once

// Hadamard codes and graph embeddings into Hamming, l-infinity and l2 space.
//
// An embedding carries a short value s and a long value L: edges must land at
// distance >= L and non-edges at distance <= s. For l2 over binary images both
// values, and the reported ratio, are squared.

#include <optional>
#include <string>
#include <vector>

#include "maxdiam/geometry.hpp"
#include "maxdiam/graph.hpp"
#include "maxdiam/io.hpp"

namespace maxdiam {

struct HadamardCode {
  std::size_t q = 0;
  std::vector<BitVector> plus_words;
  std::vector<BitVector> minus_words;

  /// plus_words followed by minus_words.
  std::vector<BitVector> all_words() const;
};

/// Sylvester doubling from the length-1 code {0}: x -> (x, x), (x, complement x).
HadamardCode hadamard_code(std::size_t q);

std::size_t next_power_of_two(std::size_t n);

enum class TargetMetric { hamming, l1_int, linf_int, l2_binary };
std::string to_string(TargetMetric m);
TargetMetric target_metric_from_string(std::string_view name);

struct Embedding {
  Graph source;
  TargetMetric metric = TargetMetric::hamming;
  /// BitVector images for hamming and l2_binary, IntVector for the others.
  std::vector<Point> image;
  BigInt short_value;
  BigInt long_value;
};

/// Distance between the images of u and v (squared for l2_binary).
BigInt embedding_distance(const Embedding& e, Vertex u, Vertex v);

struct PairWitness {
  Vertex u = 0;
  Vertex v = 0;
  BigInt distance;
};

struct EmbeddingReport {
  bool ok = false;
  /// Edge pair at smallest distance, if any edge exists.
  std::optional<PairWitness> worst_edge;
  /// Non-edge pair at largest distance, if any non-edge exists.
  std::optional<PairWitness> worst_nonedge;
  /// min edge distance / max non-edge distance; nullopt means infinite
  /// (no edges, or every non-edge at distance 0).
  std::optional<Rational> achieved_ratio;
  bool ratio_is_squared = false;
  std::vector<std::string> violations;
};

/// Exhaustive check of both embedding conditions over all vertex pairs.
/// Throws when the image does not cover every vertex or mixes dimensions.
EmbeddingReport verify_embedding(const Embedding& e);

/// n-dimensional integer vectors with p_uv = 2 if u = v, 0 on edges and 1
/// otherwise; short 1, long 2 in l-infinity.
Embedding linf_embedding(const Graph& g);

/// Four Hadamard blocks of length q, one per color class of a proper
/// 4-edge-coloring: matched pairs get a word and its complement, every other
/// vertex a fresh plus-word, so each block map is injective. q is the least
/// power of two >= max(|V|, 2). Edges land at exactly 5q/2, non-edges at 2q.
Embedding five_fourths_embedding(const Graph& g, const EdgeColoring& coloring);

/// Relabels a binary Hamming/l1 embedding as l2: squared l2 equals Hamming
/// distance on {0,1}^d, so short and long carry over as squared values.
Embedding l2_transfer(const Embedding& e);

Json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const Json& j);
Json report_to_json(const EmbeddingReport& r);

}  // namespace maxdiam
