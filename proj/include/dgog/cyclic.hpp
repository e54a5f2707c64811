#pragma once

#include "dgog/integer.hpp"

#include <string>

namespace dgog {

/// Either the infinite cyclic group Z or Z/k for some k >= 1.
class CyclicGroup {
 public:
  static CyclicGroup infinite();
  /// Throws Validation when k < 1.
  static CyclicGroup finite(Integer const& k);

  bool is_infinite() const noexcept { return order_ == 0; }
  /// Order of a finite group; 0 for Z.
  Integer const& order() const noexcept { return order_; }

  bool operator==(CyclicGroup const&) const = default;

 private:
  explicit CyclicGroup(Integer order) : order_(std::move(order)) {}
  Integer order_;
};

std::string to_string(CyclicGroup const& g);

/// Canonical representative: the value itself for Z, the residue in [0, k) for Z/k.
Integer reduce(Integer const& value, CyclicGroup const& g);

/// Injective homomorphism x -> multiplier * x between cyclic groups.
///
/// Infinite codomain: domain must be Z and multiplier nonzero.
/// Codomain Z/j: domain must be Z/k with k | j and the multiplier of order k in Z/j.
/// A trivial domain Z/1 is the zero map, whatever its multiplier.
class Embedding {
 public:
  /// Throws Validation if the map is not a well-defined injection.
  Embedding(CyclicGroup domain, CyclicGroup codomain, Integer multiplier);

  CyclicGroup const& domain() const noexcept { return domain_; }
  CyclicGroup const& codomain() const noexcept { return codomain_; }
  Integer const& multiplier() const noexcept { return multiplier_; }

  /// Index of the image in the codomain; always finite for valid embeddings.
  Integer const& index() const noexcept { return index_; }

  /// Image of a domain element, reduced in the codomain.
  Integer apply(Integer const& x) const;

 private:
  CyclicGroup domain_;
  CyclicGroup codomain_;
  Integer multiplier_;
  Integer index_;
};

/// g = rep + multiplier * quot with rep in {0, ..., index-1} and quot in the domain.
struct Decomposition {
  Integer rep;
  Integer quot;
};

Decomposition decompose(Integer const& g, Embedding const& e);

inline Integer const& transversal_size(Embedding const& e) { return e.index(); }

}  // namespace dgog
