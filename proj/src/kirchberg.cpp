#include "dgog/kirchberg.hpp"

#include "dgog/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace dgog {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "INDETERMINATE";
}

namespace {

struct Truncated {};

// Johnson's circuit search; a path steps from r(e) to s(e).
class CycleSearch {
 public:
  CycleSearch(GraphOfGroups const& g, std::size_t bound)
      : g_(g), bound_(bound), blocked_(g.vertex_count()), blockers_(g.vertex_count()) {}

  CycleEnumeration run() {
    CycleEnumeration out;
    try {
      for (start_ = 0; start_ < g_.vertex_count(); ++start_) {
        std::fill(blocked_.begin(), blocked_.end(), false);
        for (auto& b : blockers_) b.clear();
        circuit(start_);
      }
    } catch (Truncated const&) {
      out.truncated = true;
    }
    out.cycles = std::move(found_);
    return out;
  }

 private:
  bool circuit(VertexIndex v) {
    bool closed = false;
    blocked_[v] = true;
    for (EdgeIndex e : g_.incoming(v)) {
      VertexIndex w = g_.edge(e).source;
      if (w < start_) continue;
      path_.push_back(e);
      if (w == start_) {
        if (found_.size() == bound_) throw Truncated{};
        found_.push_back({path_});
        closed = true;
      } else if (!blocked_[w] && circuit(w)) {
        closed = true;
      }
      path_.pop_back();
    }
    if (closed) {
      unblock(v);
    } else {
      for (EdgeIndex e : g_.incoming(v)) {
        VertexIndex w = g_.edge(e).source;
        if (w >= start_) blockers_[w].insert(v);
      }
    }
    return closed;
  }

  void unblock(VertexIndex u) {
    blocked_[u] = false;
    auto pending = std::move(blockers_[u]);
    blockers_[u].clear();
    for (VertexIndex w : pending)
      if (blocked_[w]) unblock(w);
  }

  GraphOfGroups const& g_;
  std::size_t bound_;
  VertexIndex start_ = 0;
  std::vector<bool> blocked_;
  std::vector<std::set<VertexIndex>> blockers_;
  std::vector<EdgeIndex> path_;
  std::vector<Cycle> found_;
};

void require_kirchberg_input(GraphOfGroups const& g) {
  if (!g.all_groups_infinite())
    throw Error(ErrorKind::NonCyclicInfinite, "the Kirchberg checks need every vertex and edge group to be Z");
  g.require_no_sources();
}

// Exponent of p in |x|, x nonzero.
long valuation(Integer x, Integer const& p) {
  x = abs(x);
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::vector<Integer> prime_factors(Integer x) {
  std::vector<Integer> out;
  x = abs(x);
  for (Integer p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

}  // namespace

CycleEnumeration simple_cycles(GraphOfGroups const& g, std::size_t bound) { return CycleSearch(g, bound).run(); }

bool is_strongly_connected(GraphOfGroups const& g) {
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<VertexIndex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      VertexIndex v = stack.back();
      stack.pop_back();
      for (EdgeIndex e : forward ? g.incoming(v) : g.outgoing(v)) {
        VertexIndex w = forward ? g.edge(e).source : g.edge(e).range;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reaches_all(true) && reaches_all(false);
}

LoopCheck check_loop_condition(GraphOfGroups const& g, std::size_t cycle_bound) {
  require_kirchberg_input(g);
  CycleEnumeration cycles = simple_cycles(g, cycle_bound);
  for (auto const& c : cycles.cycles) {
    for (EdgeIndex e : c.edges) {
      if (g.edge(e).n >= 2) return {Verdict::Pass, c, std::nullopt, e};
    }
    std::set<VertexIndex> on_cycle;
    for (EdgeIndex e : c.edges) on_cycle.insert(g.edge(e).range);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end()) continue;
      if (on_cycle.count(g.edge(e).range)) return {Verdict::Pass, c, e, std::nullopt};
    }
  }
  return {cycles.truncated ? Verdict::Indeterminate : Verdict::Fail, std::nullopt, std::nullopt, std::nullopt};
}

DenominatorCheck check_denominator_condition(GraphOfGroups const& g, std::size_t k_bound, std::size_t cycle_bound) {
  require_kirchberg_input(g);
  DenominatorCheck out;
  out.k_bound = k_bound;
  CycleEnumeration cycles = simple_cycles(g, cycle_bound);

  // Along c^infinity, v_p(<q_k>) grows linearly iff v_p(prod n) > v_p(prod m) for some p.
  for (auto const& c : cycles.cycles) {
    Integer n_product = 1, m_product = 1;
    for (EdgeIndex e : c.edges) {
      n_product *= g.edge(e).n;
      m_product *= g.edge(e).m;
    }
    for (auto const& p : prime_factors(n_product)) {
      if (valuation(n_product, p) > valuation(m_product, p)) {
        out.verdict = Verdict::Pass;
        out.witness = c;
        out.prime = p;
        return out;
      }
    }
  }

  bool all_unit = true;
  Integer sup = 1;
  for (auto const& c : cycles.cycles) {
    Integer n_prefix = 1, m_prefix = 1;
    for (std::size_t k = 1; k <= k_bound; ++k) {
      Edge const& e = g.edge(c.edges[(k - 1) % c.edges.size()]);
      if (e.n != 1) all_unit = false;
      n_prefix *= e.n;
      Integer denominator = n_prefix / gcd(n_prefix, m_prefix);
      sup = std::max(sup, denominator);
      m_prefix *= e.m;
    }
  }
  out.bounded_sup = sup;
  // With n = 1 on every cycle edge, <q_k> is bounded along every infinite path.
  out.verdict = all_unit && !cycles.truncated ? Verdict::Fail : Verdict::Indeterminate;
  return out;
}

KirchbergReport check_kirchberg(GraphOfGroups const& g, std::size_t k_bound, std::size_t cycle_bound) {
  require_kirchberg_input(g);
  KirchbergReport r;
  bool connected = is_strongly_connected(g);
  r.strongly_connected = connected ? Verdict::Pass : Verdict::Fail;
  r.cofinal = connected ? Verdict::Pass : Verdict::Indeterminate;
  r.loop = check_loop_condition(g, cycle_bound);
  r.denominator = check_denominator_condition(g, k_bound, cycle_bound);
  std::vector<Verdict> parts{r.cofinal, r.loop.verdict, r.denominator.verdict};
  if (std::all_of(parts.begin(), parts.end(), [](Verdict v) { return v == Verdict::Pass; }))
    r.overall = Verdict::Pass;
  else if (std::any_of(parts.begin(), parts.end(), [](Verdict v) { return v == Verdict::Fail; }))
    r.overall = Verdict::Fail;
  else
    r.overall = Verdict::Indeterminate;
  return r;
}

namespace {

std::string vertex_name(char block, std::size_t k, std::size_t n) {
  std::string digits = std::to_string(k);
  std::size_t width = std::to_string(n - 1).size();
  return block + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Realization realize(IntMatrix const& T, IntMatrix const& S) {
  if (!T.is_square() || !S.is_square() || T.rows() != S.rows() || T.rows() == 0)
    throw Error(ErrorKind::Validation, "T and S must be square matrices of the same positive size");
  if (T.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "det T = 0");
  if (S.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "det S = 0");

  std::size_t n = T.rows();
  IntMatrix I = IntMatrix::identity(n);
  IntMatrix X(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j + 1 || j == i + 1) X(i, j) = 1;
  IntMatrix Y = Integer(2) * T.abs() + S.abs() + X;

  IntMatrix N(2 * n, 2 * n), M(2 * n, 2 * n);
  N.place(Integer(2) * I, 0, 0);
  N.place(T + Y, 0, n);
  N.place(I, n, 0);
  N.place(I + Y, n, n);
  M.place(Integer(3) * I, 0, 0);
  M.place(S + Integer(2) * Y, 0, n);
  M.place(I, n, 0);
  M.place(I + Y, n, n);

  std::vector<VertexSpec> vertices;
  auto name = [&](std::size_t i) { return i < n ? vertex_name('x', i, n) : vertex_name('y', i - n, n); };
  for (std::size_t i = 0; i < 2 * n; ++i) vertices.push_back({name(i), CyclicGroup::infinite()});
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) {
      if ((N(i, j) == 0) != (M(i, j) == 0))
        throw Error(ErrorKind::ZeroPatternMismatch, "N and M differ in support at (" + std::to_string(i) + ", " +
                                                        std::to_string(j) + ")");
      if (N(i, j) == 0) continue;
      edges.push_back({name(i) + "-" + name(j), name(i), name(j), CyclicGroup::infinite(), N(i, j), M(i, j)});
    }
  return {GraphOfGroups::build(std::move(vertices), std::move(edges)), std::move(X), std::move(Y), std::move(N),
          std::move(M)};
}

std::pair<BlockFactorization, BlockFactorization> realization_factors(IntMatrix const& T, IntMatrix const& S,
                                                                      IntMatrix const& Y) {
  std::size_t n = T.rows();
  IntMatrix I = IntMatrix::identity(n);
  IntMatrix Z(n, n);
  auto blocks = [&](IntMatrix const& a, IntMatrix const& b, IntMatrix const& c, IntMatrix const& d) {
    IntMatrix out(2 * n, 2 * n);
    out.place(a, 0, 0);
    out.place(b, 0, n);
    out.place(c, n, 0);
    out.place(d, n, n);
    return out;
  };
  IntMatrix right = blocks(I, Y, Z, I);
  BlockFactorization for_n{blocks(I, I, Z, I), blocks(Z, Integer(-1) * T, Integer(-1) * I, Z), right};
  BlockFactorization for_m{blocks(I, Integer(2) * I, Z, I), blocks(Z, Integer(-1) * S, Integer(-1) * I, Z), right};
  return {std::move(for_n), std::move(for_m)};
}

}  // namespace dgog
