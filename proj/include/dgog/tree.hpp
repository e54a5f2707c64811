#pragma once

#include "dgog/words.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dgog {

/// A coset gamma G_v of the Bass-Serre tree, written as the letters of gamma (tail dropped).
struct TreeVertex {
  std::vector<Letter> letters;
  /// The vertex v of the graph this coset lifts.
  VertexIndex lift_of;
  std::size_t depth;
};

/// Joins a vertex to its parent; the orientation points from the lift of s(e) to the lift of r(e).
struct TreeEdge {
  std::size_t child;
  std::size_t parent;
  EdgeIndex lift_of;
  bool child_to_parent;
};

/// The ball of radius `depth` about the identity coset x G_x.
struct TreeBall {
  VertexIndex root;
  std::size_t depth;
  /// In breadth-first order; vertex 0 is the root.
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  /// Canonical coset strings to vertex positions.
  std::map<std::string, std::size_t> index;

  /// Positions in `edges` of the tree edges at each vertex.
  std::vector<std::vector<std::size_t>> adjacency;

  std::vector<std::size_t> const& incident(std::size_t i) const { return adjacency.at(i); }
  std::size_t in_degree(std::size_t i) const;
  std::size_t degree(std::size_t i) const { return incident(i).size(); }
  /// Vertices whose whole neighbourhood lies in the ball.
  bool is_interior(std::size_t i) const { return vertices[i].depth < depth; }
};

/// sum over f in r^{-1}(v) of [G_v : alpha_f(G_f)], both orientations.
Integer lift_degree(GraphOfGroups const& g, VertexIndex v);

/// Throws InfiniteDegree if a lift would have infinitely many neighbours.
TreeBall expand(GraphOfGroups const& g, VertexIndex root, std::size_t depth);

struct QuotientEdge {
  EdgeIndex edge;
  VertexIndex range;
  VertexIndex source;
  /// Lifts of e pointing into one lift of r(e): [G_{r(e)} : alpha_e(G_e)].
  std::size_t in_multiplicity;
  /// Lifts of e leaving one lift of s(e): [G_{s(e)} : alpha_ebar(G_e)].
  std::size_t reverse_multiplicity;
};

struct QuotientGraph {
  std::vector<VertexIndex> vertices;
  std::vector<QuotientEdge> edges;
};

/// Folds a ball back onto the graph, reading multiplicities at interior lifts.
///
/// Throws BallTooShallow for depth 0, Validation if interior lifts disagree.
QuotientGraph quotient(GraphOfGroups const& g, TreeBall const& ball);

/// Canonical coset string, e.g. `0 e~ 1 e G_w`.
std::string coset_label(GraphOfGroups const& g, TreeVertex const& v);
std::string to_dot(GraphOfGroups const& g, TreeBall const& ball);
nlohmann::json to_json(GraphOfGroups const& g, TreeBall const& ball);
std::string to_text(GraphOfGroups const& g, TreeBall const& ball);

}  // namespace dgog
