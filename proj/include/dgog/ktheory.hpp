#pragma once

#include "dgog/gog.hpp"
#include "dgog/intlin.hpp"

namespace dgog {

/// Vertex-indexed weight matrices (vertices in id order).
///
/// For every edge e, entry (s(e), r(e)) of N gains n_e and the same entry of M gains m_e.
struct WeightMatrices {
  IntMatrix N;
  IntMatrix M;
};

/// Throws NonCyclicInfinite if some vertex or edge group is finite.
WeightMatrices weight_matrices(GraphOfGroups const& g);

struct KTheoryResult {
  AbelianInvariants K0;
  AbelianInvariants K1;
  WeightMatrices weights;
  /// Invariant factors of 1 - N and 1 - M.
  std::vector<Integer> factors_1_minus_N;
  std::vector<Integer> factors_1_minus_M;
};

/// K0 = coker(1 - N) + Z^{ker(1 - M)}, K1 = coker(1 - M) + Z^{ker(1 - N)}.
///
/// Throws NonCyclicInfinite for finite groups, Validation when the graph has a source.
KTheoryResult k_theory(GraphOfGroups const& g);

}  // namespace dgog
