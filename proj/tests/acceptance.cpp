// Acceptance runner: prints one PASS/FAIL line per criterion and exits nonzero if any fails.
#include "dgog/boundary.hpp"
#include "dgog/error.hpp"
#include "dgog/hull.hpp"
#include "dgog/kirchberg.hpp"
#include "dgog/ktheory.hpp"
#include "dgog/tree.hpp"
#include "dgog/words.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace dgog;

namespace {

// Time limits in milliseconds, one per criterion.
constexpr double limit_roundtrip_ms = 1000;
constexpr double limit_sweep_ms = 30000;
constexpr double limit_roses_ms = 1000;
constexpr double limit_normalization_ms = 10000;
constexpr double limit_alignment_ms = 30000;
constexpr double limit_hull_ms = 10000;
constexpr double limit_odometer_ms = 10000;
constexpr double limit_tree_ms = 5000;
constexpr double limit_kirchberg_ms = 5000;

// Sample sizes.
constexpr int sweep_instances = 100;
constexpr int random_words = 1000;
constexpr std::size_t max_raw_length = 12;
constexpr int alignment_pairs = 500;
constexpr std::size_t max_pair_length = 6;
constexpr std::size_t max_extension_length = 12;
constexpr int hull_triples = 1000;
constexpr int action_pairs = 200;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool condition, std::string const& what) {
    if (!condition && ok) note << what;
    ok = ok && condition;
  }
};

int failures = 0;

void report(int number, std::string const& name, double limit_ms, std::function<void(Check&)> const& body) {
  Check c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (std::exception const& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (ms >= limit_ms) c.require(false, "runtime " + std::to_string(ms) + " ms over limit");
  if (!c.ok) ++failures;
  std::printf("%s criterion %d: %s (%.0f ms, limit %.0f ms)%s%s\n", c.ok ? "PASS" : "FAIL", number, name.c_str(), ms,
              limit_ms, c.note.str().empty() ? "" : ": ", c.note.str().c_str());
  std::fflush(stdout);
}

IntMatrix m(std::vector<std::vector<Integer>> const& rows) { return IntMatrix::from_rows(rows); }

struct SweepInstance {
  IntMatrix T, S;
  Realization r;
};

std::vector<SweepInstance> sweep() {
  gen::Rng rng(20240601);
  std::vector<SweepInstance> out;
  while (out.size() < sweep_instances) {
    std::size_t n = 1 + gen::index(rng, 3);
    IntMatrix T = gen::matrix(rng, n, -3, 3), S = gen::matrix(rng, n, -3, 3);
    if (T.determinant() == 0 || S.determinant() == 0) continue;
    Realization r = realize(T, S);
    out.push_back({std::move(T), std::move(S), std::move(r)});
  }
  return out;
}

bool same_group(AbelianInvariants const& k, IntMatrix const& a) {
  Integer order = abs(oracle::laplace_determinant(a));
  return k.free_rank == 0 && oracle::quotient_profile(a) == oracle::invariant_profile(k.torsion, order);
}

// Depth-first over Sigma paths nu of length <= max from the common range, carrying lambda^{-1} nu and
// mu^{-1} nu; true as soon as both are directed, i.e. nu lies in lambda Lambda and in mu Lambda.
bool common_extension(GraphOfGroups const& g, SigmaGraph const& sigma, DirectedWord const& lambda,
                      DirectedWord const& mu, std::size_t max) {
  std::function<bool(WordBuilder const&, WordBuilder const&, std::size_t)> walk =
      [&](WordBuilder const& a, WordBuilder const& b, std::size_t length) {
        if (a.word().is_directed() && b.word().is_directed()) return true;
        if (length == max) return false;
        for (std::size_t i : sigma.at_range[a.current()]) {
          WordBuilder na = a, nb = b;
          for (WordBuilder* w : {&na, &nb}) {
            w->append_element(sigma.letters[i].rep);
            w->append_edge({sigma.letters[i].edge, Direction::Forward});
          }
          if (walk(na, nb, length + 1)) return true;
        }
        return false;
      };
  return walk(WordBuilder(g, invert(g, lambda.word())), WordBuilder(g, invert(g, mu.word())), 0);
}

bool in_right_ideal(GraphOfGroups const& g, NormalWord const& lambda, NormalWord const& nu) {
  return lambda.range() == nu.range() && multiply(g, invert(g, lambda), nu).is_directed();
}

HullElement random_hull(GraphOfGroups const& g, gen::Rng& rng) {
  if (gen::uniform(rng, 0, 9) == 0) return HullElement::zero();
  for (;;) {
    DirectedWord lambda = gen::directed_word(g, rng, gen::index(rng, g.vertex_count()), 4);
    DirectedWord mu = gen::directed_word(g, rng, gen::index(rng, g.vertex_count()), 4);
    if (lambda.source() == mu.source()) return HullElement::make(g, lambda, mu);
  }
}

}  // namespace

int main() {
  GraphOfGroups bs = fixtures::bs12();
  GraphOfGroups z = fixtures::z2z3();

  report(1, "realization roundtrip for T = [3], S = [1]", limit_roundtrip_ms, [](Check& c) {
    Realization r = realize(m({{3}}), m({{1}}));
    c.require(r.N == m({{2, 10}, {1, 8}}), "N = " + format_matrix(r.N));
    c.require(r.M == m({{3, 15}, {1, 8}}), "M = " + format_matrix(r.M));
    KTheoryResult k = k_theory(r.graph);
    c.require(k.K0.free_rank == 0 && k.K0.torsion == std::vector<Integer>{3}, "K0 = " + to_string(k.K0));
    c.require(k.K1.free_rank == 0 && k.K1.torsion.empty(), "K1 = " + to_string(k.K1));
  });

  std::vector<SweepInstance> instances;
  report(2, "random realization sweep against quotient enumeration", limit_sweep_ms, [&](Check& c) {
    instances = sweep();
    for (auto const& s : instances) {
      KTheoryResult k = k_theory(s.r.graph);
      c.require(same_group(k.K0, s.T), "K0 mismatch for T = " + format_matrix(s.T));
      c.require(same_group(k.K1, s.S), "K1 mismatch for S = " + format_matrix(s.S));
    }
    c.require(instances.size() == sweep_instances, "sweep incomplete");
  });

  report(3, "block factorizations of 1 - N and 1 - M", limit_sweep_ms, [&](Check& c) {
    c.require(instances.size() == sweep_instances, "sweep incomplete");
    for (auto const& s : instances) {
      auto [fn, fm] = realization_factors(s.T, s.S, s.r.Y);
      IntMatrix one = IntMatrix::identity(s.r.N.rows());
      c.require(fn.product() == one - s.r.N, "1 - N factorization fails for T = " + format_matrix(s.T));
      c.require(fm.product() == one - s.r.M, "1 - M factorization fails for S = " + format_matrix(s.S));
    }
  });

  report(4, "roses with 2..6 unit petals have K0 = Z/(k-1), K1 = 0", limit_roses_ms, [](Check& c) {
    std::string observed;
    bool all = true;
    for (int k = 2; k <= 6; ++k) {
      KTheoryResult r = k_theory(fixtures::rose(k));
      bool k0 = r.K0.free_rank == 0 &&
                (k == 2 ? r.K0.torsion.empty() : r.K0.torsion == std::vector<Integer>{Integer(k - 1)});
      bool k1 = r.K1.free_rank == 0 && r.K1.torsion.empty();
      all = all && k0 && k1;
      observed += (k == 2 ? "k = " : "; k = ") + std::to_string(k) + ": K0 = " + to_string(r.K0) + ", K1 = " +
                  to_string(r.K1);
    }
    c.require(all, observed);
  });

  report(5, "normalization: confluence, idempotence, associativity, inverses", limit_normalization_ms, [&](Check& c) {
    gen::Rng rng(5);
    for (auto const* g : {&bs, &z}) {
      for (int trial = 0; trial < random_words; ++trial) {
        RawWord raw = gen::raw_word(*g, rng, max_raw_length);
        NormalWord w = normalize(*g, raw);
        RawWord ours = to_raw(w);
        auto left = oracle::rewrite_normalize(*g, raw, oracle::Strategy::Leftmost);
        auto right = oracle::rewrite_normalize(*g, raw, oracle::Strategy::Rightmost);
        c.require(left.elements == right.elements && left.edges == right.edges, "reduction orders disagree");
        c.require(ours.elements == left.elements && ours.edges == left.edges, "normal form differs from rewriting");
        c.require(normalize(*g, ours) == w, "not idempotent");
        c.require(multiply(*g, w, invert(*g, w)) == NormalWord::identity(*g, w.range()), "inverse law");
        c.require(multiply(*g, invert(*g, w), w) == NormalWord::identity(*g, w.source()), "inverse law");

        NormalWord b = normalize(*g, gen::raw_word(*g, rng, max_raw_length));
        NormalWord d = normalize(*g, gen::raw_word(*g, rng, max_raw_length));
        if (b.range() != w.source() || d.range() != b.source()) continue;
        c.require(multiply(*g, multiply(*g, w, b), d) == multiply(*g, w, multiply(*g, b, d)), "associativity");
      }
    }
  });

  report(6, "join and le against brute-force common extensions", limit_alignment_ms, [&](Check& c) {
    gen::Rng rng(6);
    for (auto const* g : {&bs, &z}) {
      SigmaGraph sigma = sigma_graph(*g);
      for (int trial = 0; trial < alignment_pairs; ++trial) {
        VertexIndex v = gen::index(rng, g->vertex_count());
        DirectedWord lambda = gen::directed_word(*g, rng, v, max_pair_length);
        DirectedWord mu = gen::directed_word(*g, rng, v, max_pair_length);
        bool common = common_extension(*g, sigma, lambda, mu, max_extension_length);
        c.require(join(*g, lambda, mu).has_value() == common, "join disagrees with the search");
        bool prefix = is_prefix(q_projection(lambda), q_projection(mu));
        c.require(le(lambda, mu) == prefix, "le disagrees with the q-prefix test");
        c.require(le(lambda, mu) == in_right_ideal(*g, lambda.word(), mu.word()), "le disagrees with mu in lambda Lambda");
      }
    }
  });

  report(7, "hull associativity and germ equivalence", limit_hull_ms, [&](Check& c) {
    gen::Rng rng(7);
    for (int trial = 0; trial < hull_triples; ++trial) {
      GraphOfGroups const& g = trial % 2 ? bs : z;
      HullElement s = random_hull(g, rng), t = random_hull(g, rng), u = random_hull(g, rng);
      c.require(compose(g, compose(g, s, t), u) == compose(g, s, compose(g, t, u)), "associativity");
    }
    for (std::string const alpha_text : {"|0:e", "1:e|0:e", "|0:e.1:e", "|1:e"}) {
      LassoPath alpha = parse_lasso(bs, alpha_text);
      std::vector<HullElement> germs;
      while (germs.size() < 24) {
        DirectedWord mu = gen::along(bs, rng, alpha, gen::index(rng, 4), 0);
        DirectedWord lambda = gen::directed_word(bs, rng, 0, 2, 2);
        HullElement s = HullElement::make(bs, lambda, mu);
        germs.push_back(s);
        DirectedWord nu = gen::along(bs, rng, alpha, gen::index(rng, 6), 0);
        germs.push_back(compose(bs, s, HullElement::make(bs, nu, nu)));
      }
      std::size_t n = germs.size();
      std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eq[i][j] = germ_equal(bs, germs[i], alpha, germs[j], alpha);
      for (std::size_t i = 0; i < n; ++i) {
        c.require(eq[i][i], "germ equality is not reflexive");
        c.require(eq[i][i ^ 1], "a restriction changed the germ");
        for (std::size_t j = 0; j < n; ++j) {
          c.require(eq[i][j] == eq[j][i], "germ equality is not symmetric");
          for (std::size_t k = 0; k < n; ++k)
            c.require(!(eq[i][j] && eq[j][k]) || eq[i][k], "germ equality is not transitive");
        }
      }
    }
  });

  report(8, "odometer and action laws in BS(1,2)", limit_odometer_ms, [&](Check& c) {
    NormalWord b = NormalWord::element(bs, 0, 1);
    c.require(act(bs, b, parse_lasso(bs, "|1:e")) == ActionResult(parse_lasso(bs, "|0:e")), "b (1e)^inf");
    c.require(act(bs, b, parse_lasso(bs, "|0:e")) == ActionResult(parse_lasso(bs, "1:e|0:e")), "b (0e)^inf");
    gen::Rng rng(8);
    int checked = 0, attempts = 0;
    while (checked < action_pairs && attempts < 100 * action_pairs) {
      ++attempts;
      auto alpha = gen::lasso(bs, rng, 0, 4, 4);
      NormalWord gamma = normalize(bs, gen::raw_word(bs, rng, 5));
      NormalWord delta = normalize(bs, gen::raw_word(bs, rng, 5));
      if (!alpha || !decompose_action(bs, delta, *alpha)) continue;
      ActionResult inner = act(bs, delta, *alpha);
      auto const* beta = std::get_if<LassoPath>(&inner);
      if (!beta || !decompose_action(bs, gamma, *beta)) continue;
      ActionResult lhs = act(bs, multiply(bs, gamma, delta), *alpha);
      ActionResult rhs = act(bs, gamma, *beta);
      if (!std::holds_alternative<LassoPath>(lhs) || !std::holds_alternative<LassoPath>(rhs)) continue;
      c.require(lhs == rhs, "action law fails for " + format_word(bs, gamma) + " and " + format_word(bs, delta));
      ++checked;
    }
    c.require(checked == action_pairs, "only " + std::to_string(checked) + " pairs in the domain");
  });

  report(9, "tree balls and quotient recovery", limit_tree_ms, [&](Check& c) {
    VertexIndex v = *z.find_vertex("v");
    TreeBall ball = expand(z, v, 4);
    std::vector<std::size_t> profile(5, 0);
    for (auto const& x : ball.vertices) ++profile[x.depth];
    c.require(profile == std::vector<std::size_t>{1, 2, 4, 4, 8}, "distance profile");
    for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
      if (!ball.is_interior(i)) continue;
      bool at_v = ball.vertices[i].lift_of == v;
      c.require(ball.degree(i) == (at_v ? 2u : 3u), "degree");
      c.require(ball.in_degree(i) == (at_v ? 2u : 0u), "in-degree");
    }
    TreeBall b3 = expand(bs, 0, 3);
    for (std::size_t i = 0; i < b3.vertices.size(); ++i) {
      if (!b3.is_interior(i)) continue;
      c.require(b3.degree(i) == 3 && b3.in_degree(i) == 2, "BS(1,2) degrees");
    }
    for (auto const* g : {&bs, &z}) {
      for (VertexIndex root = 0; root < g->vertex_count(); ++root) {
        QuotientGraph q = quotient(*g, expand(*g, root, 3));
        c.require(q.vertices.size() == g->vertex_count() && q.edges.size() == g->edge_count(), "quotient shape");
        for (auto const& e : q.edges) {
          c.require(e.range == g->edge(e.edge).range && e.source == g->edge(e.edge).source, "quotient endpoints");
          c.require(Integer(e.in_multiplicity) == g->range_embedding(e.edge).index(), "quotient index weight");
          c.require(Integer(e.reverse_multiplicity) == g->source_embedding(e.edge).index(), "quotient index weight");
        }
      }
    }
  });

  report(10, "Kirchberg verdicts", limit_kirchberg_ms, [&](Check& c) {
    c.require(instances.size() == sweep_instances, "sweep incomplete");
    for (auto const& s : instances)
      c.require(check_kirchberg(s.r.graph).overall == Verdict::Pass, "realization not PASS for T = " + format_matrix(s.T));
    c.require(check_kirchberg(realize(m({{3}}), m({{1}})).graph).overall == Verdict::Pass, "realize [3], [1]");
    KirchbergReport trivial = check_kirchberg(fixtures::loop(1, 1));
    c.require(trivial.loop.verdict == Verdict::Fail, "trivial loop condition (2)");
    c.require(trivial.denominator.verdict == Verdict::Fail, "trivial loop condition (3)");
    KirchbergReport even = check_kirchberg(fixtures::loop(2, 2));
    c.require(even.denominator.verdict == Verdict::Indeterminate, "n = m = 2 condition (3)");
    c.require(even.denominator.bounded_sup == Integer(2), "n = m = 2 bounded sup");
  });

  return failures == 0 ? 0 : 1;
}
