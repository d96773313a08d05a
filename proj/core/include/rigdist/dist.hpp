#ifndef RIGDIST_DIST_HPP
#define RIGDIST_DIST_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rigdist/fn.hpp"
#include "rigdist/rig.hpp"
#include "rigdist/space.hpp"

namespace rigdist {

// A finitely supported coefficient map over elements. Canonical form: entries
// sorted by element order, distinct keys, never a zero coefficient. Equality
// is structural equality of the canonical form, so the algebraic laws of the
// library are decidable.
class Dist {
 public:
  // Canonicalizes: merges duplicate keys with rig addition, prunes zeros.
  Dist(Rig rig, std::vector<std::pair<Element, Coeff>> entries);

  static Dist zero(const Rig& rig) { return Dist(rig, {}); }
  static Dist dirac(const Rig& rig, const Element& x);

  const Rig& rig() const { return rig_; }
  const std::vector<std::pair<Element, Coeff>>& entries() const {
    return entries_;
  }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  // Zero when the key is outside the support.
  Coeff at(const Element& x) const;

  const std::optional<FinSpace>& carrier() const { return carrier_; }
  // Attaches a carrier; Errc::carrier_mismatch if the support escapes it.
  Dist with_carrier(FinSpace carrier) const;

  friend bool operator==(const Dist& a, const Dist& b) {
    return a.rig_ == b.rig_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Dist& a, const Dist& b) { return !(a == b); }

 private:
  Rig rig_;
  std::vector<std::pair<Element, Coeff>> entries_;
  std::optional<FinSpace> carrier_;
};

// Builder for accumulating weights; keeps the canonical form at the end.
class DistBuilder {
 public:
  explicit DistBuilder(Rig rig) : rig_(std::move(rig)) {}
  void accumulate(const Element& x, const Coeff& w) {
    entries_.emplace_back(x, w);
  }
  Dist take();

 private:
  Rig rig_;
  std::vector<std::pair<Element, Coeff>> entries_;
};

// Rig-sum of all weights; the image of the distribution under X -> 1.
Coeff total(const Dist& p);

// Functorial image: weight at y is the sum over the f-preimage of y.
Dist pushforward(const ElementMap& f, const Dist& p);

// A table of distributions, keyed by element: the data of a kernel X -> T(Y).
class Kernel {
 public:
  Kernel() = default;
  static Kernel from_pairs(std::vector<std::pair<Element, Dist>> pairs);
  const Dist& apply(const Element& x) const;  // Errc::map_incomplete
  const std::vector<std::pair<Element, Dist>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<Element, Dist>> pairs_;  // sorted by key
};

// Monad multiplication: keys of m are embedded distributions; the result
// weight at x is the double sum of outer times inner weights.
Dist flatten(const Dist& m);

// Kleisli extension; equals flatten(pushforward(embed . k, p)).
Dist bind(const Dist& p, const Kernel& k);

// Module structure over the rig.
Dist add(const Dist& p, const Dist& q);
Dist scalar_mul(const Dist& p, const Coeff& scalar);  // right action

// The biproduct isomorphism T(X+Y) ~ T(X) x T(Y) and its inverse.
std::pair<Dist, Dist> phi_split(const Dist& p);         // Errc::untagged_element
Dist phi_merge(const Dist& px, const Dist& py);          // Errc::rig_mismatch

// Embedding of distributions as elements (canonical function tables), so that
// T(T(X)) lives inside the same element universe.
Element dist_as_element(const Dist& p);
Dist dist_from_element(const Rig& rig, const Element& e);

}  // namespace rigdist

#endif
