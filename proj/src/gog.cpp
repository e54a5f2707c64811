#include "dgog/gog.hpp"

#include "dgog/error.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace dgog {

namespace {

[[noreturn]] void invalid(std::string const& what) { throw Error(ErrorKind::Validation, what); }
[[noreturn]] void malformed(std::string const& what) { throw Error(ErrorKind::Parse, what); }

nlohmann::json const& member(nlohmann::json const& object, char const* key, std::string const& where) {
  if (!object.is_object()) malformed(where + " must be an object");
  auto it = object.find(key);
  if (it == object.end()) malformed(where + " is missing \"" + key + "\"");
  return *it;
}

std::string string_member(nlohmann::json const& object, char const* key, std::string const& where) {
  auto const& value = member(object, key, where);
  if (!value.is_string()) malformed(where + ".\"" + key + "\" must be a string");
  return value.get<std::string>();
}

Integer integer_value(nlohmann::json const& value, std::string const& where) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<std::uint64_t>()) : Integer(value.get<std::int64_t>());
  }
  if (value.is_string()) return parse_integer(value.get<std::string>());
  malformed(where + " must be an integer");
}

CyclicGroup group_value(nlohmann::json const& value, std::string const& where) {
  std::string type = string_member(value, "type", where);
  if (type == "Z") return CyclicGroup::infinite();
  if (type == "Zmod") {
    Integer order = integer_value(member(value, "order", where), where + ".order");
    if (order < 1) invalid(where + " has order " + to_string(order) + " < 1");
    return CyclicGroup::finite(order);
  }
  malformed(where + " has unknown group type \"" + type + "\"");
}

}  // namespace

bool is_valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  return std::none_of(id.begin(), id.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '~' || c == '@' || c == ':' || c == '.' ||
           c == '|';
  });
}

GraphOfGroups GraphOfGroups::build(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
  if (vertices.empty()) invalid("graph has no vertices");
  std::sort(vertices.begin(), vertices.end(), [](auto const& a, auto const& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](auto const& a, auto const& b) { return a.id < b.id; });

  GraphOfGroups g;
  for (auto& v : vertices) {
    if (!is_valid_identifier(v.id)) invalid("vertex id \"" + v.id + "\" is not a valid identifier");
    if (!g.vertex_lookup_.emplace(v.id, g.vertex_ids_.size()).second) invalid("duplicate vertex id \"" + v.id + "\"");
    g.vertex_ids_.push_back(std::move(v.id));
    g.vertex_groups_.push_back(std::move(v.group));
  }
  g.incoming_.resize(g.vertex_ids_.size());
  g.outgoing_.resize(g.vertex_ids_.size());

  for (auto& spec : edges) {
    std::string const where = "edge \"" + spec.id + "\"";
    if (!is_valid_identifier(spec.id)) invalid("edge id \"" + spec.id + "\" is not a valid identifier");
    if (g.edge_lookup_.count(spec.id) != 0) invalid("duplicate edge id \"" + spec.id + "\"");
    auto r = g.find_vertex(spec.range);
    auto s = g.find_vertex(spec.source);
    if (!r) invalid(where + " has unknown range \"" + spec.range + "\"");
    if (!s) invalid(where + " has unknown source \"" + spec.source + "\"");
    if (spec.n == 0 || spec.m == 0) invalid(where + " has a zero multiplier");
    if (g.vertex_groups_[*r].is_infinite() && spec.n < 0) {
      spec.n = -spec.n;
      spec.m = -spec.m;
    }
    try {
      g.range_embeddings_.emplace_back(spec.group, g.vertex_groups_[*r], spec.n);
      g.source_embeddings_.emplace_back(spec.group, g.vertex_groups_[*s], spec.m);
    } catch (Error const& e) {
      invalid(where + ": " + e.what());
    }
    EdgeIndex index = g.edges_.size();
    g.edge_lookup_.emplace(spec.id, index);
    g.incoming_[*r].push_back(index);
    g.outgoing_[*s].push_back(index);
    g.edges_.push_back(Edge{std::move(spec.id), *r, *s, std::move(spec.group), std::move(spec.n), std::move(spec.m)});
  }

  // Connectivity of the underlying undirected graph.
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<VertexIndex> frontier;
  frontier.push(0);
  seen[0] = true;
  while (!frontier.empty()) {
    VertexIndex v = frontier.front();
    frontier.pop();
    auto visit = [&](VertexIndex w) {
      if (!seen[w]) {
        seen[w] = true;
        frontier.push(w);
      }
    };
    for (EdgeIndex e : g.incoming_[v]) visit(g.edges_[e].source);
    for (EdgeIndex e : g.outgoing_[v]) visit(g.edges_[e].range);
  }
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) invalid("graph is not connected: vertex \"" + g.vertex_ids_[v] + "\" is unreachable");
  }
  return g;
}

std::optional<VertexIndex> GraphOfGroups::find_vertex(std::string_view id) const {
  auto it = vertex_lookup_.find(id);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> GraphOfGroups::find_edge(std::string_view id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexIndex> GraphOfGroups::sources() const {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < vertex_count(); ++v) {
    if (incoming_[v].empty()) out.push_back(v);
  }
  return out;
}

void GraphOfGroups::require_no_sources() const {
  auto s = sources();
  if (!s.empty()) invalid("graph has a source: vertex \"" + vertex_ids_[s.front()] + "\" receives no edge");
}

bool GraphOfGroups::all_groups_infinite() const {
  return std::all_of(vertex_groups_.begin(), vertex_groups_.end(), [](auto const& g) { return g.is_infinite(); }) &&
         std::all_of(edges_.begin(), edges_.end(), [](auto const& e) { return e.group.is_infinite(); });
}

bool GraphOfGroups::operator==(GraphOfGroups const& other) const {
  if (vertex_ids_ != other.vertex_ids_ || vertex_groups_ != other.vertex_groups_) return false;
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto const& a = edges_[i];
    auto const& b = other.edges_[i];
    if (a.id != b.id || a.range != b.range || a.source != b.source || !(a.group == b.group) || a.n != b.n ||
        a.m != b.m)
      return false;
  }
  return true;
}

GraphOfGroups load_document(nlohmann::json const& document) {
  if (!document.is_object()) malformed("graph document must be a JSON object");
  auto const& vs = member(document, "vertices", "graph");
  auto const& es = member(document, "edges", "graph");
  if (!vs.is_array()) malformed("\"vertices\" must be an array");
  if (!es.is_array()) malformed("\"edges\" must be an array");

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::string where = "vertices[" + std::to_string(i) + "]";
    vertices.push_back({string_member(vs[i], "id", where), group_value(member(vs[i], "group", where), where)});
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::string where = "edges[" + std::to_string(i) + "]";
    auto const& e = es[i];
    edges.push_back({string_member(e, "id", where), string_member(e, "range", where),
                     string_member(e, "source", where), group_value(member(e, "edge_group", where), where),
                     integer_value(member(e, "n", where), where + ".n"),
                     integer_value(member(e, "m", where), where + ".m")});
  }
  return GraphOfGroups::build(std::move(vertices), std::move(edges));
}

GraphOfGroups load(std::string_view text) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  return load_document(document);
}

GraphOfGroups load(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load(std::string_view(buffer.str()));
}

GraphOfGroups load_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open graph file \"" + path + "\"");
  return load(in);
}

std::size_t enumerable_size(Integer const& size, std::size_t limit) {
  if (size > limit) invalid("transversal of size " + to_string(size) + " is too large to enumerate");
  return size.convert_to<std::size_t>();
}

SigmaGraph sigma_graph(GraphOfGroups const& g) {
  SigmaGraph sigma;
  sigma.at_range.resize(g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    std::size_t size = enumerable_size(g.range_embedding(e).index());
    for (std::size_t h = 0; h < size; ++h) {
      sigma.at_range[g.edge(e).range].push_back(sigma.letters.size());
      sigma.letters.push_back({Integer(h), e});
    }
  }
  return sigma;
}

nlohmann::json integer_to_json(Integer const& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max())
    return value.convert_to<std::int64_t>();
  return to_string(value);
}

nlohmann::json group_to_json(CyclicGroup const& group) {
  if (group.is_infinite()) return {{"type", "Z"}};
  return {{"type", "Zmod"}, {"order", integer_to_json(group.order())}};
}

nlohmann::json serialize(GraphOfGroups const& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    vertices.push_back({{"id", g.vertex_id(v)}, {"group", group_to_json(g.vertex_group(v))}});
  nlohmann::json edges = nlohmann::json::array();
  for (auto const& e : g.edges()) {
    edges.push_back({{"id", e.id},
                     {"range", g.vertex_id(e.range)},
                     {"source", g.vertex_id(e.source)},
                     {"edge_group", group_to_json(e.group)},
                     {"n", integer_to_json(e.n)},
                     {"m", integer_to_json(e.m)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

}  // namespace dgog
