#include "dgog/cyclic.hpp"

#include "dgog/error.hpp"

namespace dgog {

CyclicGroup CyclicGroup::infinite() { return CyclicGroup(Integer(0)); }

CyclicGroup CyclicGroup::finite(Integer const& k) {
  if (k < 1) throw Error(ErrorKind::Validation, "cyclic group order must be >= 1, got " + to_string(k));
  return CyclicGroup(k);
}

std::string to_string(CyclicGroup const& g) {
  return g.is_infinite() ? std::string("Z") : "Z/" + to_string(g.order());
}

Integer reduce(Integer const& value, CyclicGroup const& g) {
  return g.is_infinite() ? value : floor_mod(value, g.order());
}

Embedding::Embedding(CyclicGroup domain, CyclicGroup codomain, Integer multiplier)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), multiplier_(std::move(multiplier)) {
  auto fail = [&](std::string const& why) {
    throw Error(ErrorKind::Validation, "embedding " + to_string(domain_) + " -> " + to_string(codomain_) +
                                           " by x" + to_string(multiplier_) + " " + why);
  };
  if (multiplier_ == 0) fail("has zero multiplier");
  if (codomain_.is_infinite()) {
    if (!domain_.is_infinite()) fail("has infinite index");
    index_ = abs(multiplier_);
    return;
  }
  if (domain_.is_infinite()) fail("is not injective");
  Integer const& j = codomain_.order();
  Integer const& k = domain_.order();
  if (j % k != 0) fail("is not injective");
  if (k > 1) {
    if ((k * multiplier_) % j != 0) fail("is not a homomorphism");
    if (j / gcd(multiplier_, j) != k) fail("is not injective");
  }
  index_ = j / k;
}

Integer Embedding::apply(Integer const& x) const {
  if (!domain_.is_infinite() && domain_.order() == 1) return 0;
  return reduce(multiplier_ * x, codomain_);
}

Decomposition decompose(Integer const& g, Embedding const& e) {
  Integer const& d = e.index();
  if (e.codomain().is_infinite()) {
    Integer rep = floor_mod(g, d);
    return {rep, (g - rep) / e.multiplier()};
  }
  Integer const& j = e.codomain().order();
  Integer const& k = e.domain().order();
  Integer value = floor_mod(g, j);
  Integer rep = value % d;
  if (k == 1) return {rep, 0};
  // The image is d*Z/j, generated by multiplier = d*c with c a unit mod k.
  Integer t = (value - rep) / d;
  Integer c = floor_mod(e.multiplier(), j) / d;
  return {rep, floor_mod(t * mod_inverse(c, k), k)};
}

}  // namespace dgog
