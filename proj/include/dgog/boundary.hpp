#pragma once

#include "dgog/words.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dgog {

/// An eventually periodic infinite path prefix * cycle^infinity in E_Sigma.
///
/// Always canonical: the cycle is primitive and the prefix does not end with the cycle's last letter,
/// so two lassos denote the same path iff they compare equal.
class LassoPath {
 public:
  /// Throws Validation for letters outside their transversal or an empty cycle, NotComposable for broken paths.
  static LassoPath make(GraphOfGroups const& g, std::vector<SigmaLetter> prefix, std::vector<SigmaLetter> cycle);

  VertexIndex base() const noexcept { return base_; }
  std::vector<SigmaLetter> const& prefix() const noexcept { return prefix_; }
  std::vector<SigmaLetter> const& cycle() const noexcept { return cycle_; }
  /// The i-th letter of the infinite path.
  SigmaLetter const& letter(std::size_t i) const;

  bool operator==(LassoPath const&) const = default;

 private:
  LassoPath() = default;
  VertexIndex base_ = 0;
  std::vector<SigmaLetter> prefix_;
  std::vector<SigmaLetter> cycle_;
};

/// The first k letters.
SigmaPath prefix_of(LassoPath const& alpha, std::size_t k);

/// q(mu) is an initial segment of alpha.
bool extends(LassoPath const& alpha, DirectedWord const& mu);

/// gamma = lambda * mu^{-1} with q(mu) an initial segment of alpha.
struct ActionSplit {
  DirectedWord lambda;
  DirectedWord mu;
};

/// Cancels the trailing reversed letters of gamma against the head of alpha.
///
/// nullopt when some reversed letter survives, i.e. alpha is outside the domain of gamma.
/// Throws SourceMismatch when s(gamma) is not the base of alpha.
std::optional<ActionSplit> decompose_action(GraphOfGroups const& g, NormalWord const& gamma, LassoPath const& alpha);

/// The first letters of an action result that showed no period within the step bound.
struct PrefixResult {
  SigmaPath letters;

  bool operator==(PrefixResult const&) const = default;
};

using ActionResult = std::variant<LassoPath, PrefixResult>;

inline constexpr std::size_t default_max_steps = 10000;

/// gamma . alpha, streamed letter by letter; exact lasso when the carry state repeats.
///
/// Throws NotInDomain when alpha is outside the domain of gamma.
ActionResult act(GraphOfGroups const& g, NormalWord const& gamma, LassoPath const& alpha,
                 std::size_t max_steps = default_max_steps);

/// Letters `h:e` joined by `.`, e.g. `1:e.0:e`.
std::string format_path_letters(GraphOfGroups const& g, std::vector<SigmaLetter> const& letters);
/// `prefix|cycle`, e.g. `1:e|0:e` for 1e (0e)^infinity.
std::string format_lasso(GraphOfGroups const& g, LassoPath const& alpha);
std::string format_action(GraphOfGroups const& g, ActionResult const& result);
LassoPath parse_lasso(GraphOfGroups const& g, std::string_view text);

}  // namespace dgog
