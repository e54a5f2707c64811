#include "dgog/hull.hpp"

#include "dgog/error.hpp"

namespace dgog {

namespace {

// Right multiplication by a group element only moves the tail.
DirectedWord shift_tail(GraphOfGroups const& g, DirectedWord const& w, Integer const& by) {
  return DirectedWord(multiply(g, w.word(), NormalWord::element(g, w.source(), by)));
}

// eta with mu = nu * eta, given nu <= mu.
DirectedWord remainder(GraphOfGroups const& g, DirectedWord const& nu, DirectedWord const& mu) {
  return DirectedWord(multiply(g, invert(g, nu.word()), mu.word()));
}

DirectedWord concat(GraphOfGroups const& g, DirectedWord const& a, DirectedWord const& b) {
  return DirectedWord(multiply(g, a.word(), b.word()));
}

}  // namespace

HullElement HullElement::make(GraphOfGroups const& g, DirectedWord const& lambda, DirectedWord const& mu) {
  if (lambda.source() != mu.source())
    throw Error(ErrorKind::SourceMismatch, "lambda and mu must end at the same vertex");
  HullElement s;
  s.parts_.emplace(shift_tail(g, lambda, -mu.tail()), shift_tail(g, mu, -mu.tail()));
  return s;
}

HullElement compose(GraphOfGroups const& g, HullElement const& s, HullElement const& t) {
  if (s.is_zero() || t.is_zero()) return HullElement::zero();
  DirectedWord const& mu = s.mu();
  DirectedWord const& nu = t.lambda();
  if (le(nu, mu)) {
    DirectedWord eta = remainder(g, nu, mu);
    return HullElement::make(g, s.lambda(), concat(g, t.mu(), eta));
  }
  if (le(mu, nu)) {
    DirectedWord eta = remainder(g, mu, nu);
    return HullElement::make(g, concat(g, s.lambda(), eta), t.mu());
  }
  return HullElement::zero();
}

HullElement star(GraphOfGroups const& g, HullElement const& s) {
  if (s.is_zero()) return s;
  return HullElement::make(g, s.mu(), s.lambda());
}

bool is_idempotent(HullElement const& s) { return s.is_zero() || s.lambda() == s.mu(); }

bool in_domain(HullElement const& s, LassoPath const& alpha) { return !s.is_zero() && extends(alpha, s.mu()); }

bool germ_equal(GraphOfGroups const& g, HullElement const& s, LassoPath const& alpha, HullElement const& t,
                LassoPath const& beta) {
  if (!in_domain(s, alpha)) throw Error(ErrorKind::DomainViolation, "first path is outside the domain of its element");
  if (!in_domain(t, beta)) throw Error(ErrorKind::DomainViolation, "second path is outside the domain of its element");
  if (!(alpha == beta)) return false;
  // Both mu's are initial segments of alpha, so the shorter one divides the longer.
  bool s_shorter = s.mu().length() <= t.mu().length();
  HullElement const& small = s_shorter ? s : t;
  HullElement const& large = s_shorter ? t : s;
  DirectedWord eta = remainder(g, small.mu(), large.mu());
  return concat(g, small.lambda(), eta) == large.lambda();
}

ActionResult apply(GraphOfGroups const& g, HullElement const& s, LassoPath const& alpha, std::size_t max_steps) {
  if (!in_domain(s, alpha)) throw Error(ErrorKind::NotInDomain, "the path is outside the domain of the element");
  NormalWord gamma = multiply(g, s.lambda().word(), invert(g, s.mu().word()));
  return act(g, gamma, alpha, max_steps);
}

std::string format_hull(GraphOfGroups const& g, HullElement const& s) {
  if (s.is_zero()) return "ZERO";
  return format_word(g, s.lambda().word()) + " / " + format_word(g, s.mu().word());
}

HullElement parse_hull(GraphOfGroups const& g, std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first != std::string_view::npos && text.substr(first, last - first + 1) == "ZERO") return HullElement::zero();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error(ErrorKind::Parse, "hull element must be ZERO or 'lambda / mu'");
  auto lambda = DirectedWord::from(parse_normal_word(g, text.substr(0, slash)));
  auto mu = DirectedWord::from(parse_normal_word(g, text.substr(slash + 1)));
  if (!lambda || !mu) throw Error(ErrorKind::DomainViolation, "hull element words must be directed");
  return HullElement::make(g, *lambda, *mu);
}

}  // namespace dgog
