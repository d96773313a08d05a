#ifndef RIGDIST_STRENGTH_HPP
#define RIGDIST_STRENGTH_HPP

#include <functional>

#include "rigdist/dist.hpp"

namespace rigdist {

// Tensorial strength: pair every key of p with the fixed point y on the
// right. Weights are untouched.
Dist strength_left(const Dist& p, const Element& y);

// Mirror image: fixed point on the left.
Dist strength_right(const Element& x, const Dist& q);

// The two monoidal structures on T. psi multiplies weights p-then-q,
// psi_tilde multiplies q-then-p; they agree exactly when the rig commutes.
Dist psi(const Dist& p, const Dist& q);
Dist psi_tilde(const Dist& p, const Dist& q);

// The same maps built from their defining composites (strength, functorial
// image of the twin strength, then flatten). The direct formulas above are
// the fast path; these exist so the law suite can assert agreement.
Dist psi_via_strength(const Dist& p, const Dist& q);
Dist psi_tilde_via_strength(const Dist& p, const Dist& q);

// Cotensorial strength: a distribution over function elements becomes a
// table of distributions, x -> image of s under evaluate-at-x. Values of the
// function elements land in the space of coefficient atoms.
Kernel cotensor_strength(const Dist& s, const FinSpace& domain);

// Linearity in the first argument, checked on an explicit grid: each grid
// point is (M, y) with M a distribution over embedded distributions. The
// pentagon compared is f(flatten(M), y) against the flattened image of M
// under Q -> f(Q, y).
bool is_linear_1(const std::function<Dist(const Dist&, const Element&)>& f,
                 const std::vector<std::pair<Dist, Element>>& grid);

// The twin condition, linear in the second argument.
bool is_linear_2(const std::function<Dist(const Element&, const Dist&)>& f,
                 const std::vector<std::pair<Element, Dist>>& grid);

// Bilinear: linear in each argument of a two-distribution map. grid1 holds
// (M, q) pairs for the first argument, grid2 holds (p, N) for the second.
bool is_bilinear(const std::function<Dist(const Dist&, const Dist&)>& f,
                 const std::vector<std::pair<Dist, Dist>>& grid1,
                 const std::vector<std::pair<Dist, Dist>>& grid2);

}  // namespace rigdist

#endif
