#pragma once

#include "dgog/boundary.hpp"
#include "dgog/words.hpp"

#include <optional>
#include <string>
#include <utility>

namespace dgog {

/// An element of the inverse hull: ZERO or the partial bijection lambda mu^{-1}.
///
/// Stored canonically with tail(mu) = 0, so equal elements compare equal.
class HullElement {
 public:
  static HullElement zero() { return HullElement(); }
  /// Throws SourceMismatch unless s(lambda) = s(mu).
  static HullElement make(GraphOfGroups const& g, DirectedWord const& lambda, DirectedWord const& mu);

  bool is_zero() const noexcept { return !parts_; }
  /// Preconditions: not zero.
  DirectedWord const& lambda() const { return parts_->first; }
  DirectedWord const& mu() const { return parts_->second; }

  bool operator==(HullElement const&) const = default;

 private:
  HullElement() = default;
  std::optional<std::pair<DirectedWord, DirectedWord>> parts_;
};

HullElement compose(GraphOfGroups const& g, HullElement const& s, HullElement const& t);
HullElement star(GraphOfGroups const& g, HullElement const& s);
bool is_idempotent(HullElement const& s);

/// alpha lies in the domain of s: q(mu) is an initial segment of alpha.
bool in_domain(HullElement const& s, LassoPath const& alpha);

/// Equality of germs [s, alpha] and [t, beta].
///
/// Throws DomainViolation when alpha is outside the domain of s or beta outside that of t.
bool germ_equal(GraphOfGroups const& g, HullElement const& s, LassoPath const& alpha, HullElement const& t,
                LassoPath const& beta);

/// s . alpha. Throws NotInDomain outside the domain of s.
ActionResult apply(GraphOfGroups const& g, HullElement const& s, LassoPath const& alpha,
                   std::size_t max_steps = default_max_steps);

/// `ZERO` or `lambda / mu` with word literals.
std::string format_hull(GraphOfGroups const& g, HullElement const& s);
HullElement parse_hull(GraphOfGroups const& g, std::string_view text);

}  // namespace dgog
