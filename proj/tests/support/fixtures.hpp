#pragma once

#include "dgog/gog.hpp"
#include "dgog/words.hpp"

#include <string>

namespace fixtures {

/// One vertex v with group Z and a loop e: r = s = v, n = 2, m = 1.
dgog::GraphOfGroups bs12();
/// v: Z/2, w: Z/3, edge e with r(e) = v, s(e) = w and trivial edge group.
dgog::GraphOfGroups z2z3();
/// One vertex, k loops e1..ek, all groups Z, all multipliers 1.
dgog::GraphOfGroups rose(int k);
/// One vertex with group Z and a single loop with multipliers n, m.
dgog::GraphOfGroups loop(long n, long m);

/// Two Z vertices a, b: f (r=a, s=b, n=2, m=3), g (r=b, s=a, n=1, m=2), h loop at a (n=3, m=-1).
dgog::GraphOfGroups mixed();
/// p: Z/4, q: Z/6; c (r=p, s=q, Z/2, n=2, m=3) and loop d at q (Z/3, n=2, m=4).
dgog::GraphOfGroups finite();

/// Builds a word from its literal, failing the test on error.
dgog::NormalWord word(dgog::GraphOfGroups const& g, std::string const& literal);
dgog::DirectedWord directed(dgog::GraphOfGroups const& g, std::string const& literal);

}  // namespace fixtures
