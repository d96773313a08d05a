#ifndef RIGDIST_INTEGRATION_HPP
#define RIGDIST_INTEGRATION_HPP

#include "rigdist/dist.hpp"
#include "rigdist/strength.hpp"

namespace rigdist {

// The pairing of a distribution with a test function: the weighted sum
// of phi over the support, sum_x p(x) * phi(x). phi must be defined on
// every supported key; its carrier may be larger.
Coeff integrate(const Dist& p, const Fn& phi);

// The same value routed through the defining composite: push p forward
// along x -> phi(x) read as a distribution on the one-point space, then
// flatten and take the weight at the point.
Coeff integrate_via_flatten(const Dist& p, const Fn& phi);

// The scalar monoid on weights over the one-point space: unit is one, the
// multiplication is the rig product.
Coeff scalar_monoid_unit(const Rig& rig);
Coeff scalar_monoid_mul(const Rig& rig, const Coeff& a, const Coeff& b);
// The composite route on the one-point carrier, for cross-checking.
Coeff scalar_monoid_mul_via_psi(const Rig& rig, const Coeff& a, const Coeff& b);

// The action of functions on distributions, written P |- phi: reweight each
// key by the function value, (P |- phi)(x) = p(x) * phi(x). A constant phi
// recovers scalar_mul.
Dist act(const Dist& p, const Fn& phi);

// The action routed through its defining composite: the extension of
// x -> (weight phi(x) at x) over the unit.
Dist act_via_strength(const Dist& p, const Fn& phi);

// Convolution along a binary map: the image of the tensor product,
// pushforward(m, psi(p, q)). m is keyed by pair elements.
Dist convolve(const Dist& p, const Dist& q, const ElementMap& m);

}  // namespace rigdist

#endif
