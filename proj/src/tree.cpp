#include "dgog/tree.hpp"

#include "dgog/error.hpp"

#include <sstream>

namespace dgog {

std::size_t TreeBall::in_degree(std::size_t i) const {
  std::size_t n = 0;
  for (std::size_t k : incident(i)) {
    auto const& e = edges[k];
    if ((e.child == i) != e.child_to_parent) ++n;
  }
  return n;
}

Integer lift_degree(GraphOfGroups const& g, VertexIndex v) {
  Integer d = 0;
  for (EdgeIndex e : g.incoming(v)) d += g.range_embedding(e).index();
  for (EdgeIndex e : g.outgoing(v)) d += g.source_embedding(e).index();
  return d;
}

std::string coset_label(GraphOfGroups const& g, TreeVertex const& v) {
  std::string letters = format_letters(g, v.letters);
  return (letters.empty() ? "" : letters + " ") + "G_" + g.vertex_id(v.lift_of);
}

TreeBall expand(GraphOfGroups const& g, VertexIndex root, std::size_t depth) {
  constexpr std::size_t kMaxDegree = 1u << 16;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (lift_degree(g, v) > kMaxDegree)
      throw Error(ErrorKind::InfiniteDegree, "lifts of \"" + g.vertex_id(v) + "\" have too many neighbours");
  }
  TreeBall ball{root, depth, {}, {}, {}, {}};
  ball.vertices.push_back({{}, root, 0});
  ball.adjacency.emplace_back();
  ball.index.emplace(coset_label(g, ball.vertices[0]), 0);

  for (std::size_t at = 0; at < ball.vertices.size(); ++at) {
    if (ball.vertices[at].depth == depth) continue;
    VertexIndex v = ball.vertices[at].lift_of;
    std::vector<SignedEdge> around;
    for (EdgeIndex e : g.incoming(v)) around.push_back({e, Direction::Forward});
    for (EdgeIndex e : g.outgoing(v)) around.push_back({e, Direction::Reversed});
    for (SignedEdge f : around) {
      std::size_t size = enumerable_size(embedding_of(g, f).index());
      for (std::size_t h = 0; h < size; ++h) {
        WordBuilder b(g, ball.vertices[0].lift_of);
        for (auto const& l : ball.vertices[at].letters) b.append(l);
        b.append({Integer(h), f});
        TreeVertex next{b.word().letters(), source_of(g, f), ball.vertices[at].depth + 1};
        if (next.letters.size() != next.depth) continue;  // the parent coset
        std::string key = coset_label(g, next);
        if (ball.index.count(key)) continue;
        ball.index.emplace(std::move(key), ball.vertices.size());
        ball.adjacency[at].push_back(ball.edges.size());
        ball.adjacency.push_back({ball.edges.size()});
        ball.edges.push_back({ball.vertices.size(), at, f.edge, f.is_forward()});
        ball.vertices.push_back(std::move(next));
      }
    }
  }
  return ball;
}

QuotientGraph quotient(GraphOfGroups const& g, TreeBall const& ball) {
  if (ball.depth == 0) throw Error(ErrorKind::BallTooShallow, "a ball of radius 0 has no interior vertex");
  struct Seen {
    std::optional<std::size_t> in, out;
    VertexIndex range = 0, source = 0;
  };
  std::map<EdgeIndex, Seen> seen;
  std::vector<bool> vertex_seen(g.vertex_count(), false);

  auto record = [&](std::optional<std::size_t>& slot, std::size_t count, EdgeIndex e) {
    if (slot && *slot != count)
      throw Error(ErrorKind::Validation, "interior lifts disagree on the multiplicity of \"" + g.edge(e).id + "\"");
    slot = count;
  };

  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    if (!ball.is_interior(i)) continue;
    vertex_seen[ball.vertices[i].lift_of] = true;
    std::map<EdgeIndex, std::pair<std::size_t, std::size_t>> counts;  // (into i, out of i)
    for (EdgeIndex e : g.incoming(ball.vertices[i].lift_of)) counts[e];
    for (EdgeIndex e : g.outgoing(ball.vertices[i].lift_of)) counts[e];
    for (std::size_t k : ball.incident(i)) {
      TreeEdge const& te = ball.edges[k];
      std::size_t from = te.child_to_parent ? te.child : te.parent;
      std::size_t to = te.child_to_parent ? te.parent : te.child;
      auto& entry = seen[te.lift_of];
      entry.range = ball.vertices[to].lift_of;
      entry.source = ball.vertices[from].lift_of;
      if (to == i) ++counts[te.lift_of].first;
      if (from == i) ++counts[te.lift_of].second;
    }
    for (auto const& [e, c] : counts) {
      auto& entry = seen[e];
      if (g.edge(e).range == ball.vertices[i].lift_of) record(entry.in, c.first, e);
      if (g.edge(e).source == ball.vertices[i].lift_of) record(entry.out, c.second, e);
    }
  }

  QuotientGraph q;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v)
    if (vertex_seen[v]) q.vertices.push_back(v);
  for (auto const& [e, s] : seen) {
    if (!s.in && !s.out) continue;
    q.edges.push_back({e, s.range, s.source, s.in.value_or(0), s.out.value_or(0)});
  }
  return q;
}

std::string to_dot(GraphOfGroups const& g, TreeBall const& ball) {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    out << "  n" << i << " [label=\"" << coset_label(g, ball.vertices[i]) << "\"];\n";
  for (auto const& e : ball.edges) {
    std::size_t from = e.child_to_parent ? e.child : e.parent;
    std::size_t to = e.child_to_parent ? e.parent : e.child;
    out << "  n" << from << " -> n" << to << " [label=\"" << g.edge(e.lift_of).id << "\", arrowhead=normal];\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(GraphOfGroups const& g, TreeBall const& ball) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    auto const& v = ball.vertices[i];
    vertices.push_back({{"index", i},
                        {"coset", coset_label(g, v)},
                        {"lift_of", g.vertex_id(v.lift_of)},
                        {"depth", v.depth}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto const& e : ball.edges) {
    std::size_t from = e.child_to_parent ? e.child : e.parent;
    std::size_t to = e.child_to_parent ? e.parent : e.child;
    edges.push_back({{"from", from}, {"to", to}, {"lift_of", g.edge(e.lift_of).id}});
  }
  return {{"root", g.vertex_id(ball.root)}, {"depth", ball.depth}, {"vertices", vertices}, {"edges", edges}};
}

std::string to_text(GraphOfGroups const& g, TreeBall const& ball) {
  std::ostringstream out;
  std::vector<std::size_t> profile(ball.depth + 1, 0);
  for (auto const& v : ball.vertices) ++profile[v.depth];
  out << "root " << g.vertex_id(ball.root) << ", depth " << ball.depth << ", " << ball.vertices.size()
      << " vertices\nprofile";
  for (auto n : profile) out << ' ' << n;
  out << '\n';
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    out << i << ' ' << coset_label(g, ball.vertices[i]) << " depth=" << ball.vertices[i].depth
        << " in=" << ball.in_degree(i) << " degree=" << ball.degree(i) << '\n';
  }
  return out.str();
}

}  // namespace dgog
