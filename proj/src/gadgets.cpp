#include "maxdiam/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <functional>

#include "maxdiam/graph_algorithms.hpp"

namespace maxdiam {

int half_units(const SignedLetter& a, const SignedLetter& b) {
  if (a == b) return 0;
  return a.letter == b.letter ? 2 : 1;
}

int half_units(const LetterPair& a, const LetterPair& b) { return half_units(a[0], b[0]) + half_units(a[1], b[1]); }

Graph GadgetH::augmented() const {
  Graph g(kGadgetSize);
  for (const Edge& e : base.edges()) g.add_edge(e.u, e.v);
  for (std::size_t r = 0; r < 3; ++r)
    for (Vertex u : attachments[r]) g.add_edge(Vertex(kGadgetBase + r), u);
  return g;
}

GadgetCheck verify_gadget(const GadgetH& h, const SearchOptions& options) {
  GadgetCheck out;
  const Graph g = h.augmented();
  ColoringEnumeration all = enumerate_colorings(g, 3, options, 0);
  if (!all.complete) {
    out.budget_exceeded = true;
    return out;
  }
  out.coloring_count = all.total_count;
  out.colorable = all.total_count > 0;
  out.unique_up_to_permutation = all.total_count == 6;
  ForallResult distinct = forall_colorings(g, 3, distinct_colors_predicate({12, 13, 14}), options);
  if (distinct.outcome == ForallResult::Outcome::budget_exceeded) {
    out.budget_exceeded = true;
    return out;
  }
  out.aux_distinct = out.colorable && distinct.outcome == ForallResult::Outcome::holds;
  return out;
}

const std::array<GadgetOrientation, 6>& all_orientations() {
  static const std::array<GadgetOrientation, 6> kAll = {
      GadgetOrientation{1, 2, 2}, GadgetOrientation{2, 1, 2}, GadgetOrientation{2, 2, 1},
      GadgetOrientation{2, 1, 1}, GadgetOrientation{1, 2, 1}, GadgetOrientation{1, 1, 2}};
  return kAll;
}

std::string to_string(const GadgetOrientation& o) {
  return "(" + std::to_string(o[0]) + "," + std::to_string(o[1]) + "," + std::to_string(o[2]) + ")";
}

namespace {

LetterPair aux_letters(std::size_t role, int visible_block) {
  LetterPair p;
  p[visible_block - 1] = {std::uint32_t(role), false};
  p[2 - visible_block] = {std::uint32_t(3 + role), false};
  return p;
}

bool attaches(const LetterPair& p, std::size_t role, const GadgetOrientation& o) {
  return p[o[role] - 1] == SignedLetter{std::uint32_t(role), true};
}

// Backtracking over letter pairs for the twelve base vertices, with forward
// checking on pair domains and smallest-domain-first ordering. In fixed mode
// attachments must come out exactly as given; in joint mode they are read
// off the letters and constrained through the base's unique coloring.
class LetterSearch {
 public:
  using Leaf = std::function<bool(const std::vector<LetterPair>&, std::uint32_t privates)>;
  using Domain = std::bitset<256>;

  LetterSearch(const Graph& base, const GadgetOrientation& o, std::uint32_t privates) : base_(base), o_(o) {
    for (std::uint32_t l = 0; l < 3; ++l) alphabet_.push_back(l);
    for (std::uint32_t p = 0; p < privates; ++p) alphabet_.push_back(kFirstPrivateLetter + p);
    const std::size_t signed_count = 2 * alphabet_.size();
    for (std::size_t a = 0; a < signed_count; ++a)
      for (std::size_t b = 0; b < signed_count; ++b)
        values_.push_back({signed_letter(a), signed_letter(b)});
    if (values_.size() > 256) throw std::invalid_argument("LetterSearch: too many private letters");
    far_.assign(values_.size(), Domain());
    for (std::size_t v = 0; v < values_.size(); ++v) {
      for (std::size_t w = 0; w < values_.size(); ++w)
        if (half_units(values_[v], values_[w]) >= 3) far_[v].set(w);
      for (std::size_t r = 0; r < 3; ++r)
        if (attaches(values_[v], r, o_)) attach_[r].set(v);
    }
    for (std::size_t v = 0; v < values_.size(); ++v) all_.set(v);
  }

  void fix_attachments(const std::array<std::vector<Vertex>, 3>& t) {
    fixed_ = true;
    for (std::size_t r = 0; r < 3; ++r) {
      member_[r].assign(kGadgetBase, false);
      for (Vertex u : t[r]) member_[r][u] = true;
    }
  }

  void constrain_by_coloring(const Coloring& base_coloring, std::size_t cap) {
    fixed_ = false;
    coloring_ = base_coloring;
    cap_ = cap;
  }

  // Returns true when the leaf callback asked to stop.
  bool run(const Leaf& leaf) {
    leaf_ = &leaf;
    sol_.assign(kGadgetBase, {});
    assigned_.assign(kGadgetBase, false);
    used_private_ = 0;
    count_.fill(0);
    colors_.fill(0);
    std::vector<Domain> domains(kGadgetBase, all_);
    if (fixed_)
      for (Vertex u = 0; u < kGadgetBase; ++u)
        for (std::size_t r = 0; r < 3; ++r) domains[u] &= member_[r][u] ? attach_[r] : ~attach_[r];
    return place(domains, 0);
  }

 private:
  SignedLetter signed_letter(std::size_t s) const { return {alphabet_[s / 2], s % 2 == 1}; }

  bool place(const std::vector<Domain>& domains, std::size_t depth) {
    if (depth == kGadgetBase) {
      if (!fixed_ && !joint_leaf_ok()) return false;
      return (*leaf_)(sol_, used_private_);
    }
    Vertex u = kGadgetBase;
    std::size_t best = ~std::size_t(0);
    for (Vertex v = 0; v < kGadgetBase; ++v)
      if (!assigned_[v] && domains[v].count() < best) {
        best = domains[v].count();
        u = v;
      }
    for (std::size_t val = 0; val < values_.size(); ++val) {
      if (!domains[u].test(val)) continue;
      const LetterPair& p = values_[val];
      std::uint32_t after_a, after_b;
      if (!private_ok(p[0], used_private_, after_a) || !private_ok(p[1], after_a, after_b)) continue;
      std::array<bool, 3> in{};
      for (std::size_t r = 0; r < 3; ++r) in[r] = attach_[r].test(val);
      if (!fixed_ && !joint_ok(u, in)) continue;

      std::vector<Domain> next = domains;
      bool wiped = false;
      for (Vertex w = 0; w < kGadgetBase && !wiped; ++w) {
        if (assigned_[w] || w == u) continue;
        next[w] &= base_.has_edge(u, w) ? far_[val] : ~far_[val];
        wiped = next[w].none();
      }
      if (wiped) continue;

      sol_[u] = p;
      assigned_[u] = true;
      const std::uint32_t saved = used_private_;
      const auto saved_count = count_;
      const auto saved_colors = colors_;
      used_private_ = after_b;
      for (std::size_t r = 0; r < 3; ++r)
        if (in[r]) {
          ++count_[r];
          colors_[r] |= 1u << coloring_[u];
        }
      bool stop = place(next, depth + 1);
      count_ = saved_count;
      colors_ = saved_colors;
      used_private_ = saved;
      assigned_[u] = false;
      if (stop) return true;
    }
    return false;
  }

  // Private letters are interchangeable: a fresh one must be the next unused
  // id and first appear uncomplemented.
  static bool private_ok(const SignedLetter& l, std::uint32_t used, std::uint32_t& after) {
    after = used;
    if (l.letter < kFirstPrivateLetter) return true;
    const std::uint32_t p = l.letter - kFirstPrivateLetter;
    if (p < used) return true;
    if (p > used || l.complemented) return false;
    after = used + 1;
    return true;
  }

  bool joint_ok(Vertex u, const std::array<bool, 3>& in) const {
    for (std::size_t r = 0; r < 3; ++r) {
      if (!in[r]) continue;
      if (count_[r] >= cap_) return false;
      const unsigned bit = 1u << coloring_[u];
      if (cap_ <= 2 && (colors_[r] & bit)) return false;
      if (std::popcount(colors_[r] | bit) > 2) return false;
    }
    return true;
  }

  bool joint_leaf_ok() const {
    unsigned missing_seen = 0;
    for (std::size_t r = 0; r < 3; ++r) {
      if (std::popcount(colors_[r]) != 2) return false;
      unsigned missing = 7u & ~colors_[r];
      if (missing_seen & missing) return false;
      missing_seen |= missing;
    }
    return true;
  }

  const Graph& base_;
  GadgetOrientation o_;
  std::vector<std::uint32_t> alphabet_;
  std::vector<LetterPair> values_;
  std::vector<Domain> far_;
  std::array<Domain, 3> attach_;
  Domain all_;
  bool fixed_ = true;
  std::array<std::vector<bool>, 3> member_;
  Coloring coloring_ = Coloring(kGadgetBase, 0);
  std::size_t cap_ = 0;
  const Leaf* leaf_ = nullptr;
  std::vector<LetterPair> sol_;
  std::vector<bool> assigned_;
  std::uint32_t used_private_ = 0;
  std::array<std::size_t, 3> count_{};
  std::array<unsigned, 3> colors_{};
};

OrientedGadgetEmbedding complete_embedding(const GadgetOrientation& o, const std::vector<LetterPair>& base,
                                           std::uint32_t privates) {
  OrientedGadgetEmbedding e;
  e.orientation = o;
  e.letters = base;
  for (std::size_t r = 0; r < 3; ++r) e.letters.push_back(aux_letters(r, o[r]));
  e.private_count = privates;
  return e;
}

Graph chvatal_minus(const Edge& removed) {
  Graph full = named::chvatal();
  Graph base(kGadgetBase);
  for (const Edge& e : full.edges())
    if (!(e == removed)) base.add_edge(e.u, e.v);
  return base;
}

}  // namespace

OrientedGadgetEmbedding OrientedGadgetEmbedding::swapped() const {
  OrientedGadgetEmbedding out = *this;
  for (auto& o : out.orientation) o = 3 - o;
  for (auto& p : out.letters) std::swap(p[0], p[1]);
  return out;
}

Embedding OrientedGadgetEmbedding::instantiate(const GadgetH& h, std::size_t q) const {
  const std::size_t letters_needed = kFirstPrivateLetter + private_count;
  if (q < letters_needed || q < 2 || (q & (q - 1)) != 0)
    throw std::invalid_argument("instantiate: q must be a power of two covering every letter");
  const HadamardCode code = hadamard_code(q);
  auto word = [&](const SignedLetter& l) {
    return l.complemented ? code.minus_words[l.letter] : code.plus_words[l.letter];
  };
  Embedding e{h.augmented(), TargetMetric::hamming, {}, BigInt(q), BigInt(3 * q / 2)};
  for (const LetterPair& p : letters) e.image.emplace_back(word(p[0]).concat(word(p[1])));
  return e;
}

bool letters_valid(const GadgetH& h, const OrientedGadgetEmbedding& e) {
  if (e.letters.size() != kGadgetSize) return false;
  const Graph g = h.augmented();
  for (std::size_t r = 0; r < 3; ++r)
    if (!(e.letters[kGadgetBase + r] == aux_letters(r, e.orientation[r]))) return false;
  for (Vertex u = 0; u < kGadgetBase; ++u)
    for (const SignedLetter& l : e.letters[u])
      if (l.letter >= 3 && l.letter < kFirstPrivateLetter) return false;
  for (Vertex u = 0; u < kGadgetSize; ++u)
    for (Vertex v = u + 1; v < kGadgetSize; ++v) {
      int d = half_units(e.letters[u], e.letters[v]);
      if (g.has_edge(u, v) ? d < 3 : d > 2) return false;
    }
  return true;
}

std::optional<OrientedGadgetEmbedding> find_oriented_embedding(const GadgetH& h, const GadgetOrientation& orientation,
                                                               std::uint32_t max_private_letters) {
  for (std::uint32_t privates = 0; privates <= max_private_letters; ++privates) {
    LetterSearch search(h.base, orientation, privates);
    search.fix_attachments(h.attachments);
    std::optional<OrientedGadgetEmbedding> found;
    search.run([&](const std::vector<LetterPair>& base, std::uint32_t used) {
      found = complete_embedding(orientation, base, used);
      return true;
    });
    if (found) {
      if (!letters_valid(h, *found)) throw std::logic_error("find_oriented_embedding: search produced an invalid embedding");
      return found;
    }
  }
  return std::nullopt;
}

std::map<GadgetOrientation, OrientedGadgetEmbedding> gadget_library(const GadgetH& h,
                                                                    std::uint32_t max_private_letters) {
  const GadgetOrientation canonical = all_orientations()[0];
  auto e = find_oriented_embedding(h, canonical, max_private_letters);
  if (!e) throw std::runtime_error("gadget_library: no embedding for orientation " + to_string(canonical));
  std::map<GadgetOrientation, OrientedGadgetEmbedding> out;
  OrientedGadgetEmbedding s = e->swapped();
  out.emplace(canonical, std::move(*e));
  out.emplace(s.orientation, std::move(s));
  return out;
}

GadgetH build_gadget_H(const GadgetSearchOptions& options) {
  const Graph chvatal = named::chvatal();
  const GadgetOrientation canonical = all_orientations()[0];
  for (std::size_t cap = options.max_attachments; cap <= 4; ++cap) {
    for (const Edge& removed : chvatal.edges()) {
      const Graph base = chvatal_minus(removed);
      ColoringEnumeration colorings = enumerate_colorings(base, 3, options.coloring, 1);
      if (!colorings.complete || colorings.total_count != 6) continue;
      const Coloring& unique = colorings.colorings.front();

      for (std::uint32_t privates = 0; privates <= options.max_private_letters; ++privates) {
        std::optional<GadgetH> result;
        LetterSearch search(base, canonical, privates);
        search.constrain_by_coloring(unique, cap);
        search.run([&](const std::vector<LetterPair>& letters, std::uint32_t) {
          GadgetH h{removed, base, {}};
          for (Vertex u = 0; u < kGadgetBase; ++u)
            for (std::size_t r = 0; r < 3; ++r)
              if (attaches(letters[u], r, canonical)) h.attachments[r].push_back(u);
          if (!verify_gadget(h, options.coloring).ok()) return false;
          if (!find_oriented_embedding(h, canonical, options.max_private_letters)) return false;
          result = std::move(h);
          return true;
        });
        if (result) return *result;
      }
    }
  }
  throw std::runtime_error("build_gadget_H: no candidate gadget passed verification");
}

Json gadget_to_json(const GadgetH& h) {
  return {{"removed_edge", {h.removed_edge.u, h.removed_edge.v}},
          {"base", graph_to_json(h.base)},
          {"attachments", {{"i", h.attachments[0]}, {"j", h.attachments[1]}, {"k", h.attachments[2]}}},
          {"aux_vertices", {{"i", 12}, {"j", 13}, {"k", 14}}}};
}

GadgetH gadget_from_json(const Json& j) {
  try {
    GadgetH h;
    h.removed_edge = Edge{j.at("removed_edge").at(0).get<Vertex>(), j.at("removed_edge").at(1).get<Vertex>()};
    h.base = graph_from_json(j.at("base"));
    if (h.base.vertex_count() != kGadgetBase) throw FormatError("gadget base must have 12 vertices");
    const char* names[3] = {"i", "j", "k"};
    for (std::size_t r = 0; r < 3; ++r) {
      h.attachments[r] = j.at("attachments").at(names[r]).get<std::vector<Vertex>>();
      for (Vertex u : h.attachments[r])
        if (u >= kGadgetBase) throw FormatError("gadget attachment outside the base");
    }
    return h;
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("malformed gadget: ") + ex.what());
  }
}

// ---------------------------------------------------------------- composite

Vertex CompositeGraph::gadget_vertex(std::size_t t, Vertex local) const {
  return Vertex(source.vertex_count() + kGadgetBase * t + local);
}

std::vector<std::array<Vertex, 3>> ascending_roles(const Hypergraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (const auto& e : g.hyperedges()) {
    if (e.size() != 3) throw PreconditionViolation("ascending_roles: hyperedge of size other than 3");
    std::array<Vertex, 3> roles{e[0], e[1], e[2]};
    std::sort(roles.begin(), roles.end());
    out.push_back(roles);
  }
  return out;
}

std::vector<std::array<Vertex, 3>> oriented_roles(const Hypergraph& g, const Graph& j) {
  const Hypergraph expected = incidence_hypergraph(j);
  if (expected.hyperedges() != g.hyperedges() || expected.vertex_count() != g.vertex_count())
    throw PreconditionViolation("oriented_roles: hypergraph is not the incidence hypergraph of j");
  const Orientation arcs = dfs_orientation(j);
  std::vector<std::array<Vertex, 3>> out = ascending_roles(g);
  for (std::size_t t = 0; t < out.size(); ++t) {
    auto& roles = out[t];
    auto block = [&](Vertex x) { return arcs.arcs[x].first == Vertex(t) ? 1 : 2; };
    // Role i goes to the vertex whose block differs from the other two; the
    // remaining pair keeps ascending order.
    for (std::size_t r = 0; r < 3; ++r) {
      if (block(roles[r]) != block(roles[(r + 1) % 3]) && block(roles[r]) != block(roles[(r + 2) % 3])) {
        Vertex odd = roles[r];
        std::array<Vertex, 2> rest{roles[(r + 1) % 3], roles[(r + 2) % 3]};
        std::sort(rest.begin(), rest.end());
        roles = {odd, rest[0], rest[1]};
        break;
      }
    }
  }
  return out;
}

CompositeGraph build_composite(const Hypergraph& g, const GadgetH& h) { return build_composite(g, h, ascending_roles(g)); }

CompositeGraph build_composite(const Hypergraph& g, const GadgetH& h, const std::vector<std::array<Vertex, 3>>& roles) {
  if (!g.is_uniform(3)) throw PreconditionViolation("build_composite: hypergraph is not 3-uniform");
  if (!g.is_regular(2)) throw PreconditionViolation("build_composite: hypergraph is not 2-regular");
  if (roles.size() != g.hyperedges().size()) throw PreconditionViolation("build_composite: one role triple per hyperedge");
  CompositeGraph c;
  c.source = g;
  const std::size_t n = g.vertex_count();
  c.graph = Graph(n + kGadgetBase * g.hyperedges().size());
  for (Vertex v = 0; v < n; ++v) c.provenance.push_back({-1, v});
  for (std::size_t t = 0; t < g.hyperedges().size(); ++t) {
    for (Vertex u = 0; u < kGadgetBase; ++u) c.provenance.push_back({int(t), u});
    std::array<Vertex, 3> sorted_roles = roles.at(t);
    std::sort(sorted_roles.begin(), sorted_roles.end());
    std::vector<Vertex> members = g.hyperedges()[t];
    std::sort(members.begin(), members.end());
    if (!std::equal(members.begin(), members.end(), sorted_roles.begin()))
      throw PreconditionViolation("build_composite: roles do not match hyperedge " + std::to_string(t));
    c.roles.push_back(roles[t]);
    for (const Edge& e : h.base.edges()) c.graph.add_edge(c.gadget_vertex(t, e.u), c.gadget_vertex(t, e.v));
    for (std::size_t r = 0; r < 3; ++r)
      for (Vertex u : h.attachments[r]) c.graph.add_edge(roles[t][r], c.gadget_vertex(t, u));
  }
  return c;
}

StitchedEmbedding stitch_embedding(const CompositeGraph& c, const Graph& j,
                                   const std::map<GadgetOrientation, OrientedGadgetEmbedding>& library) {
  const Hypergraph expected = incidence_hypergraph(j);
  if (expected.hyperedges() != c.source.hyperedges() || expected.vertex_count() != c.source.vertex_count())
    throw PreconditionViolation("stitch_embedding: composite source is not the incidence hypergraph of j");
  const Orientation arcs = dfs_orientation(j);

  const std::size_t n = c.source.vertex_count();
  const std::size_t m = c.source.hyperedges().size();
  std::uint32_t private_max = 0;
  for (const auto& [o, e] : library) private_max = std::max(private_max, e.private_count);
  StitchedEmbedding out;
  out.q = next_power_of_two(std::max<std::size_t>({n + 2 * m, 2 * n + m * private_max, 2}));
  const HadamardCode code = hadamard_code(out.q);
  auto word = [&](std::uint32_t letter, bool complemented) {
    return complemented ? code.minus_words[letter] : code.plus_words[letter];
  };

  std::vector<Point> image(c.graph.vertex_count(), Point(BitVector(1)));
  for (Vertex x = 0; x < n; ++x) image[x] = word(2 * x, false).concat(word(2 * x + 1, false));

  for (std::size_t t = 0; t < m; ++t) {
    GadgetOrientation o{};
    for (std::size_t r = 0; r < 3; ++r) {
      const Vertex x = c.roles[t][r];
      o[r] = arcs.arcs[x].first == Vertex(t) ? 1 : 2;
    }
    auto it = library.find(o);
    if (it == library.end())
      throw PreconditionViolation("stitch_embedding: no gadget embedding for orientation " + to_string(o) +
                                  "; build the composite with oriented_roles");
    out.orientations.push_back(o);
    auto global = [&](std::uint32_t letter) -> std::uint32_t {
      if (letter < 3) return 2 * c.roles[t][letter] + std::uint32_t(o[letter] - 1);
      if (letter < kFirstPrivateLetter) return 2 * c.roles[t][letter - 3] + std::uint32_t(2 - o[letter - 3]);
      return std::uint32_t(2 * n + t * private_max + (letter - kFirstPrivateLetter));
    };
    for (Vertex u = 0; u < kGadgetBase; ++u) {
      const LetterPair& p = it->second.letters[u];
      image[c.gadget_vertex(t, u)] =
          word(global(p[0].letter), p[0].complemented).concat(word(global(p[1].letter), p[1].complemented));
    }
  }
  out.embedding = Embedding{c.graph, TargetMetric::hamming, std::move(image), BigInt(out.q), BigInt(3 * out.q / 2)};
  return out;
}

}  // namespace maxdiam
