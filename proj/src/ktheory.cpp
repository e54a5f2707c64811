#include "dgog/ktheory.hpp"

#include "dgog/error.hpp"

namespace dgog {

WeightMatrices weight_matrices(GraphOfGroups const& g) {
  if (!g.all_groups_infinite())
    throw Error(ErrorKind::NonCyclicInfinite, "K-theory needs every vertex and edge group to be Z");
  std::size_t n = g.vertex_count();
  WeightMatrices w{IntMatrix(n, n), IntMatrix(n, n)};
  for (auto const& e : g.edges()) {
    w.N(e.source, e.range) += e.n;
    w.M(e.source, e.range) += e.m;
  }
  return w;
}

KTheoryResult k_theory(GraphOfGroups const& g) {
  WeightMatrices w = weight_matrices(g);
  g.require_no_sources();
  IntMatrix one = IntMatrix::identity(g.vertex_count());
  IntMatrix a = one - w.N;
  IntMatrix b = one - w.M;

  KTheoryResult out;
  out.K0 = cokernel(a);
  out.K0.free_rank += kernel_rank(b);
  out.K1 = cokernel(b);
  out.K1.free_rank += kernel_rank(a);
  out.factors_1_minus_N = invariant_factors(a);
  out.factors_1_minus_M = invariant_factors(b);
  out.weights = std::move(w);
  return out;
}

}  // namespace dgog
