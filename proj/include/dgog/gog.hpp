#pragma once

#include "dgog/cyclic.hpp"
#include "dgog/integer.hpp"

#include <json.hpp>

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dgog {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct VertexSpec {
  std::string id;
  CyclicGroup group;
};

/// An edge e with r(e) = range, s(e) = source, alpha_e = x n into G_range, alpha_ebar = x m into G_source.
struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
  CyclicGroup group;
  Integer n;
  Integer m;
};

struct Edge {
  std::string id;
  VertexIndex range;
  VertexIndex source;
  CyclicGroup group;
  Integer n;
  Integer m;
};

/// A validated, connected, row-finite graph of cyclic groups over a finite directed graph.
///
/// Vertices and edges are stored sorted by id; indices are positions in that order.
/// Sign convention: when the range group is Z the stored n is positive.
class GraphOfGroups {
 public:
  /// Throws Validation naming the violated invariant.
  static GraphOfGroups build(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::string const& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
  CyclicGroup const& vertex_group(VertexIndex v) const { return vertex_groups_.at(v); }
  Edge const& edge(EdgeIndex e) const { return edges_.at(e); }
  std::vector<Edge> const& edges() const noexcept { return edges_; }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<EdgeIndex> find_edge(std::string_view id) const;

  /// Edges e with r(e) = v, in id order.
  std::vector<EdgeIndex> const& incoming(VertexIndex v) const { return incoming_.at(v); }
  /// Edges e with s(e) = v, in id order.
  std::vector<EdgeIndex> const& outgoing(VertexIndex v) const { return outgoing_.at(v); }

  /// alpha_e : G_e -> G_{r(e)}.
  Embedding const& range_embedding(EdgeIndex e) const { return range_embeddings_.at(e); }
  /// alpha_ebar : G_e -> G_{s(e)}.
  Embedding const& source_embedding(EdgeIndex e) const { return source_embeddings_.at(e); }

  /// Vertices receiving no edge. Loading permits them; operations needing r^{-1}(v) nonempty check.
  std::vector<VertexIndex> sources() const;
  /// Throws Validation when some vertex is a source.
  void require_no_sources() const;

  bool all_groups_infinite() const;

  bool operator==(GraphOfGroups const&) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<CyclicGroup> vertex_groups_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeIndex>> incoming_;
  std::vector<std::vector<EdgeIndex>> outgoing_;
  std::vector<Embedding> range_embeddings_;
  std::vector<Embedding> source_embeddings_;
  std::map<std::string, VertexIndex, std::less<>> vertex_lookup_;
  std::map<std::string, EdgeIndex, std::less<>> edge_lookup_;
};

/// A letter (h, e) of the Sigma-graph: h in the transversal of alpha_e(G_e) in G_{r(e)}.
struct SigmaLetter {
  Integer rep;
  EdgeIndex edge;

  bool operator==(SigmaLetter const&) const = default;
};

/// The letters of E_Sigma, ordered by edge id then representative.
struct SigmaGraph {
  std::vector<SigmaLetter> letters;
  /// Positions in `letters` of the letters with range v.
  std::vector<std::vector<std::size_t>> at_range;
};

/// Throws Validation when some transversal is too large to enumerate.
SigmaGraph sigma_graph(GraphOfGroups const& g);

/// Transversal size as a machine integer; throws Validation above `limit`.
std::size_t enumerable_size(Integer const& size, std::size_t limit = 1u << 20);

/// Identifiers may not contain whitespace or any of `~ @ : . |`, which the literal syntaxes reserve.
bool is_valid_identifier(std::string_view id);

GraphOfGroups load_document(nlohmann::json const& document);
/// Throws Parse for malformed JSON, Validation for invariant violations.
GraphOfGroups load(std::string_view text);
GraphOfGroups load(std::istream& in);
GraphOfGroups load_file(std::string const& path);

/// Canonical JSON: vertices and edges sorted by id.
nlohmann::json serialize(GraphOfGroups const& g);

nlohmann::json group_to_json(CyclicGroup const& group);
nlohmann::json integer_to_json(Integer const& value);

}  // namespace dgog
