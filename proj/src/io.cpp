#include "maxdiam/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace maxdiam {

namespace {

Vertex as_vertex(const Json& v, std::size_t n) {
  if (!v.is_number_integer()) throw FormatError("vertex ids must be integers");
  auto x = v.get<std::int64_t>();
  if (x < 0 || static_cast<std::size_t>(x) >= n) throw FormatError("vertex id " + std::to_string(x) + " out of range");
  return static_cast<Vertex>(x);
}

std::size_t vertex_count(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
    throw FormatError("expected an object with a nonnegative integer \"n\"");
  return j["n"].get<std::size_t>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const std::size_t n = vertex_count(j);
  if (!j.contains("edges") || !j["edges"].is_array()) throw FormatError("graph needs an \"edges\" array");
  Graph g(n);
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [u, v]");
    try {
      g.add_edge(as_vertex(e[0], n), as_vertex(e[1], n));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return g;
}

Json hypergraph_to_json(const Hypergraph& h) {
  return {{"n", h.vertex_count()}, {"hyperedges", h.hyperedges()}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  const std::size_t n = vertex_count(j);
  if (!j.contains("hyperedges") || !j["hyperedges"].is_array())
    throw FormatError("hypergraph needs a \"hyperedges\" array");
  Hypergraph h(n);
  for (const Json& e : j["hyperedges"]) {
    if (!e.is_array()) throw FormatError("each hyperedge must be an array");
    std::vector<Vertex> members;
    for (const Json& v : e) members.push_back(as_vertex(v, n));
    try {
      h.add_hyperedge(std::move(members));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return h;
}

Graph graph_from_edge_list(const std::string& text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::int64_t top = -1;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::int64_t u, v;
    if (!(fields >> u)) continue;
    std::string rest;
    if (!(fields >> v) || (fields >> rest) || u < 0 || v < 0)
      throw FormatError("edge list line " + std::to_string(lineno) + ": expected two vertex ids");
    pairs.emplace_back(u, v);
    top = std::max({top, u, v});
  }
  Graph g(static_cast<std::size_t>(top + 1));
  for (auto [u, v] : pairs) {
    try {
      g.add_edge(Vertex(u), Vertex(v));
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return g;
}

// ---------------------------------------------------------------- pointsets

Json point_to_json(const Point& p) {
  if (auto* b = std::get_if<BitVector>(&p)) return b->to_string();
  if (auto* v = std::get_if<IntVector>(&p)) return v->entries;
  const auto& s = std::get<SphereLatticePoint>(p);
  return {{"axes", s.axes}, {"pos", s.positive_axis}, {"coeffs", s.coeffs}, {"kappa", s.kappa}};
}

Point point_from_json(Metric metric, const Json& j) {
  try {
    switch (metric) {
      case Metric::hamming:
        if (!j.is_string()) throw FormatError("hamming points are bit strings");
        return BitVector::from_string(j.get<std::string>());
      case Metric::l1_int:
      case Metric::linf_int:
        if (!j.is_array()) throw FormatError("integer points are arrays");
        return IntVector(j.get<std::vector<std::int64_t>>());
      case Metric::l2_sphere_lattice:
        if (!j.is_object()) throw FormatError("sphere lattice points are objects");
        return SphereLatticePoint(j.at("axes").get<std::array<std::uint32_t, 3>>(), j.at("pos").get<std::uint32_t>(),
                                  j.at("coeffs").get<std::array<std::uint32_t, 3>>(), j.at("kappa").get<std::uint32_t>());
    }
  } catch (const Json::exception& ex) {
    throw FormatError(std::string("malformed point: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("invalid point: ") + ex.what());
  }
  throw std::logic_error("unreachable");
}

Json pointset_to_json(const Pointset& ps) {
  std::vector<std::string> text;
  for (const Point& p : ps.points()) text.push_back(point_to_json(p).dump());
  std::vector<std::size_t> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return text[a] < text[b]; });
  Json points = Json::array(), labels = Json::array();
  for (std::size_t i : order) {
    points.push_back(point_to_json(ps.point(i)));
    if (!ps.labels().empty()) labels.push_back(ps.labels()[i]);
  }
  Json out = {{"metric", to_string(ps.metric())}, {"dim", ps.dim()}, {"points", points}};
  if (!ps.labels().empty()) out["labels"] = labels;
  return out;
}

Pointset pointset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("metric") || !j.contains("dim") || !j.contains("points"))
    throw FormatError("pointset needs \"metric\", \"dim\" and \"points\"");
  Metric metric;
  try {
    metric = metric_from_string(j["metric"].get<std::string>());
  } catch (const std::exception& ex) {
    throw FormatError(ex.what());
  }
  Pointset ps(metric, j["dim"].get<std::size_t>());
  const Json& points = j["points"];
  const bool labelled = j.contains("labels");
  if (labelled && j["labels"].size() != points.size()) throw FormatError("labels and points differ in length");
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      ps.add(point_from_json(metric, points[i]), labelled ? j["labels"][i].get<std::string>() : std::string());
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
  }
  return ps;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw FormatError(path.string() + ": " + ex.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return graph_from_json(Json::parse(text));
    } catch (const Json::parse_error& ex) {
      throw FormatError(path.string() + ": " + ex.what());
    }
  }
  return graph_from_edge_list(text);
}

}  // namespace maxdiam
