#pragma once

// Exact k-coloring by backtracking: DSATUR vertex order (smallest remaining
// domain, then highest degree, then lowest index), forward checking on
// neighbor domains, and color symmetry breaking where a vertex may only open
// the next unused color. Every search is node-budgeted and reports an
// exhausted budget separately from "no coloring exists".

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "maxdiam/graph.hpp"

namespace maxdiam {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;
inline constexpr int kMaxColors = 16;

/// Reads MAXDIAM_BUDGET_NODES when set, else kDefaultNodeBudget.
std::uint64_t default_node_budget();

struct SearchOptions {
  std::uint64_t node_budget = default_node_budget();
  /// Vertices branched on first, in this order, before DSATUR takes over.
  std::vector<Vertex> priority;
  bool symmetry_breaking = true;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes) : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

enum class SearchStatus { found, none, budget_exceeded };

struct ColoringSearchResult {
  SearchStatus status = SearchStatus::none;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

ColoringSearchResult find_coloring(const Graph& g, int k, const SearchOptions& options = {});

struct ColoringEnumeration {
  bool complete = false;
  /// One representative per color-permutation class when symmetry breaking
  /// is on (otherwise every coloring), capped at the requested limit.
  std::vector<Coloring> colorings;
  /// Representatives visited, including those beyond the storage limit.
  std::uint64_t representative_count = 0;
  /// Number of proper colorings counted with all color permutations.
  std::uint64_t total_count = 0;
  std::uint64_t nodes = 0;
};

ColoringEnumeration enumerate_colorings(const Graph& g, int k, const SearchOptions& options = {},
                                        std::size_t keep_limit = 1000);

/// Three-valued judgement of a partial coloring (uncolored vertices hold -1).
/// `satisfied` promises that every completion satisfies the property, so the
/// subtree is skipped. Predicates must be invariant under color permutation
/// when symmetry breaking is on.
enum class Verdict { satisfied, violated, undetermined };
using PartialPredicate = std::function<Verdict(std::span<const int>)>;

struct ForallResult {
  enum class Outcome { holds, refuted, budget_exceeded };
  Outcome outcome = Outcome::holds;
  /// First proper coloring found on which the predicate is not satisfied.
  std::optional<Coloring> counterexample;
  std::uint64_t nodes = 0;
};

/// True iff the predicate holds on every proper k-coloring; vacuously true
/// when none exists. Short-circuits on the first counterexample.
ForallResult forall_colorings(const Graph& g, int k, const PartialPredicate& predicate,
                              const SearchOptions& options = {});

/// Predicate: the listed vertices all receive pairwise distinct colors.
PartialPredicate distinct_colors_predicate(std::vector<Vertex> vertices);

// Rainbow colorings of hypergraphs are proper colorings of the primal graph.
ColoringSearchResult rainbow_first(const Hypergraph& h, int k, const SearchOptions& options = {});
ColoringEnumeration rainbow_all(const Hypergraph& h, int k, const SearchOptions& options = {},
                                std::size_t keep_limit = 1000);
ForallResult rainbow_forall(const Hypergraph& h, int k, const PartialPredicate& predicate,
                            const SearchOptions& options = {});

}  // namespace maxdiam
