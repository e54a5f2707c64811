#pragma once

#include "dgog/gog.hpp"
#include "dgog/intlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dgog {

enum class Verdict { Pass, Fail, Indeterminate };

std::string to_string(Verdict v);

/// A simple cycle e_1 ... e_k with s(e_i) = r(e_{i+1}) and s(e_k) = r(e_1).
struct Cycle {
  std::vector<EdgeIndex> edges;

  bool operator==(Cycle const&) const = default;
};

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  /// True when the bound stopped the enumeration early.
  bool truncated = false;
};

/// Vertex-simple cycles of the directed graph, each listed once from its least vertex.
CycleEnumeration simple_cycles(GraphOfGroups const& g, std::size_t bound = 10000);

bool is_strongly_connected(GraphOfGroups const& g);

struct LoopCheck {
  Verdict verdict = Verdict::Fail;
  std::optional<Cycle> witness;
  /// An edge entering the witness cycle, when that is the reason it passes.
  std::optional<EdgeIndex> entrance;
  /// An edge of the witness cycle with n >= 2, when that is the reason it passes.
  std::optional<EdgeIndex> heavy_edge;
};

/// Every cycle has an entrance or an edge with n >= 2 somewhere; checked on the enumerated cycles.
LoopCheck check_loop_condition(GraphOfGroups const& g, std::size_t cycle_bound = 10000);

struct DenominatorCheck {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<Cycle> witness;
  /// A prime with larger valuation in prod n than in prod m along the witness.
  std::optional<Integer> prime;
  /// Largest denominator <q_k> seen along iterated cycles for k <= k_bound.
  std::optional<Integer> bounded_sup;
  std::size_t k_bound = 0;
};

/// Some infinite path has unbounded denominators <q_k>, q_k = m_1...m_{k-1} / n_1...n_k.
DenominatorCheck check_denominator_condition(GraphOfGroups const& g, std::size_t k_bound = 64,
                                             std::size_t cycle_bound = 10000);

struct KirchbergReport {
  Verdict strongly_connected = Verdict::Fail;
  /// Pass when strongly connected; otherwise not decided here.
  Verdict cofinal = Verdict::Indeterminate;
  LoopCheck loop;
  DenominatorCheck denominator;
  Verdict overall = Verdict::Indeterminate;
};

/// Throws NonCyclicInfinite for finite groups, Validation when the graph has a source.
KirchbergReport check_kirchberg(GraphOfGroups const& g, std::size_t k_bound = 64, std::size_t cycle_bound = 10000);

/// A graph of Z's with prescribed K-theory, plus the matrices that built it.
struct Realization {
  GraphOfGroups graph;
  IntMatrix X;
  IntMatrix Y;
  IntMatrix N;
  IntMatrix M;
};

/// Builds a Kirchberg graph whose K0 is coker(T) and K1 is coker(S).
///
/// Throws Validation for shape mismatch, SingularMatrix when det T or det S is 0,
/// ZeroPatternMismatch if the N and M supports differ.
Realization realize(IntMatrix const& T, IntMatrix const& S);

/// 1 - N = left * middle * right with left and right unimodular.
struct BlockFactorization {
  IntMatrix left;
  IntMatrix middle;
  IntMatrix right;

  IntMatrix product() const { return left * middle * right; }
};

/// Factorizations of 1 - N (with T) and 1 - M (with S) for a realization.
std::pair<BlockFactorization, BlockFactorization> realization_factors(IntMatrix const& T, IntMatrix const& S,
                                                                      IntMatrix const& Y);

}  // namespace dgog
