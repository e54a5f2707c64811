#include "oracles.hpp"

#include <set>
#include <stdexcept>

using namespace dgog;

namespace oracle {

namespace {

struct Side {
  CyclicGroup domain;
  CyclicGroup codomain;
  Integer mult;
};

Side side(GraphOfGroups const& g, SignedEdge f) {
  Edge const& e = g.edge(f.edge);
  if (f.dir == Direction::Forward) return {e.group, g.vertex_group(e.range), e.n};
  return {e.group, g.vertex_group(e.source), e.m};
}

Side other_side(GraphOfGroups const& g, SignedEdge f) { return side(g, f.reversed()); }

Integer canon(Integer const& v, CyclicGroup const& group) {
  if (group.is_infinite()) return v;
  Integer k = group.order();
  return ((v % k) + k) % k;
}

Integer image(Integer const& x, Side const& s) {
  if (!s.domain.is_infinite() && s.domain.order() == 1) return 0;
  return canon(s.mult * x, s.codomain);
}

// Least representative of the coset g + image, and the domain element it differs by.
std::pair<Integer, Integer> split(Integer const& g, Side const& s) {
  if (s.codomain.is_infinite()) {
    Integer m = s.mult < 0 ? Integer(-s.mult) : s.mult;
    Integer rep = ((g % m) + m) % m;
    return {rep, (g - rep) / s.mult};
  }
  std::pair<Integer, Integer> best{-1, 0};
  for (Integer q = 0; q < s.domain.order(); ++q) {
    Integer r = canon(g - image(q, s), s.codomain);
    if (best.first < 0 || r < best.first) best = {r, q};
  }
  return best;
}

VertexIndex range_vertex(GraphOfGroups const& g, SignedEdge f) {
  return f.dir == Direction::Forward ? g.edge(f.edge).range : g.edge(f.edge).source;
}

VertexIndex source_vertex(GraphOfGroups const& g, SignedEdge f) {
  return f.dir == Direction::Forward ? g.edge(f.edge).source : g.edge(f.edge).range;
}

}  // namespace

Reduced rewrite_normalize(GraphOfGroups const& g, RawWord const& raw, Strategy strategy) {
  Reduced w{raw.elements, raw.edges};
  auto group_at = [&](std::size_t i) -> CyclicGroup const& {
    VertexIndex v = i == 0 ? (w.edges.empty() ? *raw.start : range_vertex(g, w.edges[0]))
                           : source_vertex(g, w.edges[i - 1]);
    return g.vertex_group(v);
  };
  for (std::size_t i = 0; i < w.elements.size(); ++i) w.elements[i] = canon(w.elements[i], group_at(i));

  for (;;) {
    // Redexes as (position, kind) with kind 0 = collapse, 1 = split.
    std::vector<std::pair<std::size_t, int>> redexes;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
      Side s = side(g, w.edges[i]);
      auto [rep, q] = split(w.elements[i], s);
      if (i > 0 && w.edges[i] == w.edges[i - 1].reversed() && rep == 0) redexes.push_back({i, 0});
      if (rep != w.elements[i]) redexes.push_back({i, 1});
    }
    if (redexes.empty()) return w;
    auto [i, kind] = strategy == Strategy::Leftmost ? redexes.front() : redexes.back();
    SignedEdge f = w.edges[i];
    auto [rep, q] = split(w.elements[i], side(g, f));
    Integer pushed = image(q, other_side(g, f));
    if (kind == 1) {
      w.elements[i] = rep;
      w.elements[i + 1] = canon(w.elements[i + 1] + pushed, group_at(i + 1));
    } else {
      Integer merged = canon(w.elements[i - 1] + pushed + w.elements[i + 1], group_at(i - 1));
      w.elements[i - 1] = merged;
      w.elements.erase(w.elements.begin() + static_cast<long>(i), w.elements.begin() + static_cast<long>(i) + 2);
      w.edges.erase(w.edges.begin() + static_cast<long>(i) - 1, w.edges.begin() + static_cast<long>(i) + 1);
    }
  }
}

Integer laplace_determinant(IntMatrix const& a) {
  std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    Integer term = a(0, j) * laplace_determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

std::map<Integer, std::size_t> quotient_profile(IntMatrix const& a) {
  std::size_t n = a.rows();
  Integer det = laplace_determinant(a);
  if (det == 0) throw std::invalid_argument("quotient_profile needs a nonsingular matrix");
  Integer order = det < 0 ? Integer(-det) : det;

  // x lies in A Z^n iff adj(A) x = 0 mod det, so x -> adj(A) x mod |det| embeds the quotient.
  std::vector<std::vector<Integer>> generators(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != i) minor(rr, cc++) = a(r, c);
        ++rr;
      }
      Integer cof = laplace_determinant(minor);
      if ((i + j) % 2) cof = -cof;
      // generator for column j of adj(A): entry i is cofactor C_{j i}
      generators[j][i] = ((cof % order) + order) % order;
    }

  std::set<std::vector<Integer>> elements{std::vector<Integer>(n, 0)};
  std::vector<std::vector<Integer>> frontier{std::vector<Integer>(n, 0)};
  while (!frontier.empty()) {
    auto x = frontier.back();
    frontier.pop_back();
    for (auto const& gen : generators) {
      std::vector<Integer> y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = (x[i] + gen[i]) % order;
      if (elements.insert(y).second) frontier.push_back(y);
    }
  }
  if (Integer(elements.size()) != order) throw std::logic_error("quotient enumeration size differs from |det|");

  std::map<Integer, std::size_t> profile;
  for (Integer k = 1; k <= order; ++k) {
    if (order % k != 0) continue;
    std::size_t count = 0;
    for (auto const& x : elements) {
      bool killed = true;
      for (auto const& c : x) killed = killed && (k * c) % order == 0;
      if (killed) ++count;
    }
    profile[k] = count;
  }
  return profile;
}

std::map<Integer, std::size_t> invariant_profile(std::vector<Integer> const& torsion, Integer const& order) {
  std::map<Integer, std::size_t> profile;
  for (Integer k = 1; k <= order; ++k) {
    if (order % k != 0) continue;
    Integer count = 1;
    for (auto const& t : torsion) count *= boost::multiprecision::gcd(k, t);
    profile[k] = count.convert_to<std::size_t>();
  }
  return profile;
}

}  // namespace oracle
