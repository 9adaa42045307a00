#include "maxdiam/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace maxdiam {

std::uint64_t default_node_budget() {
  if (const char* env = std::getenv("MAXDIAM_BUDGET_NODES")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultNodeBudget;
}

namespace {

using Mask = std::uint32_t;

enum class LeafAction { keep_going, stop };

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, const SearchOptions& options, const PartialPredicate* prune)
      : g_(g), k_(k), options_(options), prune_(prune) {
    if (k < 1 || k > kMaxColors) throw std::invalid_argument("coloring: k must lie in [1, 16]");
    const std::size_t n = g.vertex_count();
    adjacency_.resize(n);
    for (Vertex v = 0; v < n; ++v) adjacency_[v] = g.neighbors(v);
    domains_.assign(n, (Mask(1) << k) - 1);
    colors_.assign(n, -1);
    for (Vertex v : options.priority)
      if (v >= n) throw std::out_of_range("coloring: priority vertex out of range");
  }

  // Calls on_leaf for every complete proper coloring reached; returns false
  // if the budget ran out.
  template <class OnLeaf>
  bool run(OnLeaf&& on_leaf) {
    budget_hit_ = false;
    dfs(on_leaf, -1);
    return !budget_hit_;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  Vertex select() const {
    for (Vertex v : options_.priority)
      if (colors_[v] < 0) return v;
    Vertex best = kNone;
    int best_size = kMaxColors + 1;
    std::size_t best_degree = 0;
    for (Vertex v = 0; v < colors_.size(); ++v) {
      if (colors_[v] >= 0) continue;
      int size = std::popcount(domains_[v]);
      std::size_t degree = adjacency_[v].size();
      if (size < best_size || (size == best_size && degree > best_degree)) {
        best = v;
        best_size = size;
        best_degree = degree;
      }
    }
    return best;
  }

  // Returns true when the search must stop (leaf asked to stop or budget).
  template <class OnLeaf>
  bool dfs(OnLeaf& on_leaf, int max_used) {
    if (prune_ && (*prune_)(colors_) == Verdict::satisfied) return false;
    Vertex v = select();
    if (v == kNone) return on_leaf(colors_) == LeafAction::stop;

    Mask allowed = domains_[v];
    if (options_.symmetry_breaking && max_used + 2 < k_) allowed &= (Mask(1) << (max_used + 2)) - 1;
    while (allowed) {
      int c = std::countr_zero(allowed);
      allowed &= allowed - 1;
      if (++nodes_ > options_.node_budget) {
        budget_hit_ = true;
        return true;
      }
      std::size_t mark = trail_.size();
      colors_[v] = c;
      bool wiped = false;
      const Mask bit = Mask(1) << c;
      for (Vertex w : adjacency_[v]) {
        if (colors_[w] >= 0 || !(domains_[w] & bit)) continue;
        trail_.emplace_back(w, domains_[w]);
        domains_[w] &= ~bit;
        if (domains_[w] == 0) {
          wiped = true;
          break;
        }
      }
      bool stop = !wiped && dfs(on_leaf, std::max(max_used, c));
      while (trail_.size() > mark) {
        domains_[trail_.back().first] = trail_.back().second;
        trail_.pop_back();
      }
      colors_[v] = -1;
      if (stop) return true;
    }
    return false;
  }

  static constexpr Vertex kNone = ~Vertex(0);

  const Graph& g_;
  int k_;
  const SearchOptions& options_;
  const PartialPredicate* prune_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Mask> domains_;
  std::vector<int> colors_;
  std::vector<std::pair<Vertex, Mask>> trail_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

std::uint64_t falling_factorial(int k, int m) {
  std::uint64_t out = 1;
  for (int i = 0; i < m; ++i) out *= static_cast<std::uint64_t>(k - i);
  return out;
}

int colors_used(std::span<const int> colors) {
  int top = -1;
  for (int c : colors) top = std::max(top, c);
  return top + 1;
}

}  // namespace

ColoringSearchResult find_coloring(const Graph& g, int k, const SearchOptions& options) {
  ColoringSearch search(g, k, options, nullptr);
  ColoringSearchResult result;
  bool finished = search.run([&](std::span<const int> colors) {
    result.coloring.assign(colors.begin(), colors.end());
    result.status = SearchStatus::found;
    return LeafAction::stop;
  });
  result.nodes = search.nodes();
  if (!finished) result.status = SearchStatus::budget_exceeded;
  return result;
}

ColoringEnumeration enumerate_colorings(const Graph& g, int k, const SearchOptions& options,
                                        std::size_t keep_limit) {
  ColoringSearch search(g, k, options, nullptr);
  ColoringEnumeration out;
  out.complete = search.run([&](std::span<const int> colors) {
    ++out.representative_count;
    if (options.symmetry_breaking) {
      // Symmetry breaking keeps only colorings whose colors appear in
      // first-use order along the search, one per permutation class.
      out.total_count += falling_factorial(k, colors_used(colors));
    } else {
      out.total_count += 1;
    }
    if (out.colorings.size() < keep_limit) out.colorings.emplace_back(colors.begin(), colors.end());
    return LeafAction::keep_going;
  });
  out.nodes = search.nodes();
  return out;
}

ForallResult forall_colorings(const Graph& g, int k, const PartialPredicate& predicate,
                              const SearchOptions& options) {
  ColoringSearch search(g, k, options, &predicate);
  ForallResult result;
  bool finished = search.run([&](std::span<const int> colors) {
    if (predicate(colors) == Verdict::satisfied) return LeafAction::keep_going;
    result.counterexample = Coloring(colors.begin(), colors.end());
    result.outcome = ForallResult::Outcome::refuted;
    return LeafAction::stop;
  });
  result.nodes = search.nodes();
  if (!finished) result.outcome = ForallResult::Outcome::budget_exceeded;
  return result;
}

PartialPredicate distinct_colors_predicate(std::vector<Vertex> vertices) {
  return [vertices = std::move(vertices)](std::span<const int> colors) {
    bool complete = true;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      int ca = colors[vertices[a]];
      if (ca < 0) {
        complete = false;
        continue;
      }
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (colors[vertices[b]] == ca) return Verdict::violated;
    }
    return complete ? Verdict::satisfied : Verdict::undetermined;
  };
}

ColoringSearchResult rainbow_first(const Hypergraph& h, int k, const SearchOptions& options) {
  return find_coloring(h.primal_graph(), k, options);
}

ColoringEnumeration rainbow_all(const Hypergraph& h, int k, const SearchOptions& options, std::size_t keep_limit) {
  SearchOptions guarded = options;
  guarded.node_budget = std::min<std::uint64_t>(options.node_budget, std::uint64_t(1) << 30);
  return enumerate_colorings(h.primal_graph(), k, guarded, keep_limit);
}

ForallResult rainbow_forall(const Hypergraph& h, int k, const PartialPredicate& predicate,
                            const SearchOptions& options) {
  return forall_colorings(h.primal_graph(), k, predicate, options);
}

}  // namespace maxdiam
