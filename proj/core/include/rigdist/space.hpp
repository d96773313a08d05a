#ifndef RIGDIST_SPACE_HPP
#define RIGDIST_SPACE_HPP

#include <initializer_list>
#include <vector>

#include "rigdist/element.hpp"

namespace rigdist {

// A finite carrier: a duplicate-free list of elements in canonical order.
class FinSpace {
 public:
  FinSpace() = default;
  explicit FinSpace(std::vector<Element> elements);  // sorts, rejects dups
  FinSpace(std::initializer_list<Element> elements)
      : FinSpace(std::vector<Element>(elements)) {}

  static FinSpace of_atoms(std::initializer_list<const char*> names);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const Element& x) const;
  const std::vector<Element>& elements() const { return elements_; }

  friend bool operator==(const FinSpace& a, const FinSpace& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<Element> elements_;
};

// Cartesian product: all pairs, x-major lexicographic order.
FinSpace product(const FinSpace& a, const FinSpace& b);

// Disjoint union: left-tagged elements of a, then right-tagged of b.
FinSpace coproduct(const FinSpace& a, const FinSpace& b);

// The one-point space {*}.
FinSpace unit_space();

}  // namespace rigdist

#endif
