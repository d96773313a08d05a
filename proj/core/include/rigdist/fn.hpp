#ifndef RIGDIST_FN_HPP
#define RIGDIST_FN_HPP

#include <utility>
#include <vector>

#include "rigdist/rig.hpp"
#include "rigdist/space.hpp"

namespace rigdist {

// A test function: an explicit total table from a finite carrier to
// coefficients. Tables, not closures, so extensional equality and
// serialization stay decidable.
class Fn {
 public:
  Fn(Rig rig, FinSpace carrier, std::vector<std::pair<Element, Coeff>> rows);

  static Fn constant(const Rig& rig, const FinSpace& carrier, const Coeff& value);
  static Fn constant_one(const Rig& rig, const FinSpace& carrier);
  // 1 on the given points, 0 elsewhere.
  static Fn indicator(const Rig& rig, const FinSpace& carrier,
                      const std::vector<Element>& points);

  const Rig& rig() const { return rig_; }
  const FinSpace& carrier() const { return carrier_; }
  const std::vector<std::pair<Element, Coeff>>& rows() const { return rows_; }

  const Coeff& at(const Element& x) const;  // Errc::map_incomplete
  bool defined_at(const Element& x) const;

  Fn pointwise_add(const Fn& other) const;
  Fn pointwise_mul(const Fn& other) const;
  Fn scaled_right(const Coeff& scalar) const;  // x -> f(x) * scalar

  // Embeds the table as a function element (values become coefficient text).
  Element as_element() const;

  friend bool operator==(const Fn& a, const Fn& b) {
    return a.rig_ == b.rig_ && a.rows_ == b.rows_;
  }

 private:
  Rig rig_;
  FinSpace carrier_;
  std::vector<std::pair<Element, Coeff>> rows_;  // sorted, total on carrier
};

// Decodes a function element over the given carrier.
Fn fn_from_element(const Rig& rig, const FinSpace& carrier, const Element& e);

// Coefficient-valued atoms: points of the scalar space R inside the element
// universe. coeff_of_atom raises Errc::key_not_coefficient when the element
// is not such an atom.
Element atom_of_coeff(const Rig& rig, const Coeff& value);
Coeff coeff_of_atom(const Rig& rig, const Element& e);

// All total tables carrier -> codomain_values, in canonical order.
// Errc::cap_exceeded when |codomain|^|carrier| would exceed cap.
std::vector<Fn> enumerate_functions(const Rig& rig, const FinSpace& domain,
                                    const std::vector<Coeff>& codomain_values,
                                    std::size_t cap = 10000);

}  // namespace rigdist

#endif
