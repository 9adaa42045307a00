#pragma once

// The Chvatal-minus-one-edge gadget with three auxiliary vertices i, j, k,
// its oriented codeword-pair embeddings, the composite graph built from a
// 3-uniform 2-regular hypergraph, and the stitched Hamming embedding.
//
// Embeddings are described over abstract letters. A vertex gets a pair of
// signed letters, one per block; each letter later becomes a Hadamard plus
// word and a set sign its complement. Two signed letters sit at block
// distance 0 (equal), q (same letter, opposite sign) or q/2 (otherwise), so
// a pair distance is a multiple of q/2. Edges need >= 3q/2, non-edges <= q.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxdiam/coloring.hpp"
#include "maxdiam/embedding.hpp"
#include "maxdiam/graph.hpp"

namespace maxdiam {

struct SignedLetter {
  std::uint32_t letter = 0;
  bool complemented = false;
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using LetterPair = std::array<SignedLetter, 2>;

/// Block distance in units of q/2: 0, 1 or 2.
int half_units(const SignedLetter& a, const SignedLetter& b);
int half_units(const LetterPair& a, const LetterPair& b);

inline constexpr std::size_t kGadgetBase = 12;
inline constexpr std::size_t kGadgetSize = 15;

struct GadgetH {
  /// Chvatal edge removed to obtain the base, in the standard labelling.
  Edge removed_edge;
  Graph base;
  /// T^i, T^j, T^k: base vertices adjacent to auxiliary vertex i, j, k.
  std::array<std::vector<Vertex>, 3> attachments;

  /// Base on vertices 0..11, auxiliary i, j, k as 12, 13, 14.
  Graph augmented() const;
};

struct GadgetCheck {
  bool colorable = false;
  bool aux_distinct = false;
  std::uint64_t coloring_count = 0;
  bool unique_up_to_permutation = false;
  bool budget_exceeded = false;
  bool ok() const { return colorable && aux_distinct && unique_up_to_permutation && !budget_exceeded; }
};

/// Exhaustive check of the gadget properties on the 15-vertex graph.
GadgetCheck verify_gadget(const GadgetH& h, const SearchOptions& options = {});

/// Visible block (1 or 2) of each auxiliary vertex, in role order i, j, k.
using GadgetOrientation = std::array<int, 3>;

/// The six orientations with mixed blocks, in a fixed order.
const std::array<GadgetOrientation, 6>& all_orientations();
std::string to_string(const GadgetOrientation& o);

/// Letter ids: 0, 1, 2 are the visible letters of i, j, k; 3, 4, 5 their
/// hidden letters; private letters follow from 6.
inline constexpr std::uint32_t kFirstPrivateLetter = 6;

struct OrientedGadgetEmbedding {
  GadgetOrientation orientation{};
  /// One pair per vertex of the augmented gadget.
  std::vector<LetterPair> letters;
  std::uint32_t private_count = 0;

  /// Same embedding with the two blocks exchanged everywhere.
  OrientedGadgetEmbedding swapped() const;
  /// Concrete 3/2-embedding into {0,1}^{2q} with letter l mapped to plus
  /// word l of the Hadamard code of length q.
  Embedding instantiate(const GadgetH& h, std::size_t q) const;
};

/// Checks the letter-level conditions: every gadget edge at >= 3 half units,
/// every non-edge at <= 2, and the visibility rule (hidden letters appear only
/// in their auxiliary vertex; non-auxiliary vertices use no letter that belongs
/// to an auxiliary vertex other than its visible one).
bool letters_valid(const GadgetH& h, const OrientedGadgetEmbedding& e);

struct GadgetSearchOptions {
  std::uint32_t max_private_letters = 3;
  /// Upper bound on each |T^x| tried during the joint search.
  std::size_t max_attachments = 2;
  SearchOptions coloring{};
};

/// Searches removed Chvatal edges in order, keeping bases with a unique
/// 3-coloring, and jointly searches a (1,2,2)-oriented letter embedding whose
/// induced attachments force i, j, k apart. Attachment sets are capped at
/// max_attachments, then the cap is raised up to 4. The first candidate whose
/// 15-vertex graph passes verify_gadget is returned. Throws
/// std::runtime_error when no candidate exists.
GadgetH build_gadget_H(const GadgetSearchOptions& options = {});

/// Backtracking search for an embedding of the fixed gadget with the given
/// orientation. nullopt when none exists within the private-letter bound.
std::optional<OrientedGadgetEmbedding> find_oriented_embedding(const GadgetH& h, const GadgetOrientation& orientation,
                                                               std::uint32_t max_private_letters = 3);

/// Embeddings of the fixed gadget for (1,2,2) and its block swap (2,1,1).
/// Other orientations are reached by permuting which hyperedge vertex plays
/// which auxiliary role when the composite is built (see oriented_roles).
std::map<GadgetOrientation, OrientedGadgetEmbedding> gadget_library(const GadgetH& h,
                                                                    std::uint32_t max_private_letters = 3);

Json gadget_to_json(const GadgetH& h);
GadgetH gadget_from_json(const Json& j);

struct VertexOrigin {
  /// -1 for an original hypergraph vertex.
  int hyperedge = -1;
  Vertex local = 0;
};

struct CompositeGraph {
  Hypergraph source;
  Graph graph;
  std::vector<VertexOrigin> provenance;
  /// Per hyperedge, its vertices in auxiliary role order i, j, k.
  std::vector<std::array<Vertex, 3>> roles;

  /// Vertex of the composite graph for gadget vertex `local` of hyperedge t.
  Vertex gadget_vertex(std::size_t t, Vertex local) const;
};

/// One gadget copy per hyperedge; the listed vertices take roles i, j, k and
/// are joined to the copy's T^i, T^j, T^k. Without roles, ascending order.
CompositeGraph build_composite(const Hypergraph& g, const GadgetH& h);
CompositeGraph build_composite(const Hypergraph& g, const GadgetH& h, const std::vector<std::array<Vertex, 3>>& roles);

std::vector<std::array<Vertex, 3>> ascending_roles(const Hypergraph& g);
/// Roles compatible with the DFS orientation of j: in each hyperedge, role i
/// goes to the vertex whose block differs from the other two, so every gadget
/// copy is (1,2,2)- or (2,1,1)-oriented. Requires g = incidence_hypergraph(j).
std::vector<std::array<Vertex, 3>> oriented_roles(const Hypergraph& g, const Graph& j);

/// Original vertex x maps to (x_1, x_2); gadget copies follow the oriented
/// embedding picked by the DFS orientation of j. The source hypergraph must
/// be incidence_hypergraph(j) for a 3-regular bridgeless j.
struct StitchedEmbedding {
  Embedding embedding;
  std::size_t q = 0;
  /// Orientation used for each hyperedge.
  std::vector<GadgetOrientation> orientations;
};

StitchedEmbedding stitch_embedding(const CompositeGraph& c, const Graph& j,
                                   const std::map<GadgetOrientation, OrientedGadgetEmbedding>& library);

}  // namespace maxdiam
