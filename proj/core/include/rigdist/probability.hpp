#ifndef RIGDIST_PROBABILITY_HPP
#define RIGDIST_PROBABILITY_HPP

#include "rigdist/integration.hpp"

namespace rigdist {

// Probability here means exactly total = one. There is no order on a rig,
// hence no interval from zero to one to confine weights to.
bool is_probability(const Dist& p);

// Divides by the total: scalar_mul(p, total(p)^-1).
// Errc::not_invertible when the total has no inverse in this rig.
Dist normalize(const Dist& p);

// Pushforwards along the two projections of a pair-keyed distribution.
// Errc::unpaired_element when a key is not a pair.
std::pair<Dist, Dist> marginals(const Dist& p);

// Moments of a distribution on the scalar space (keys are coefficient
// atoms): moment n is sum p(r) * r^n, so moment 0 is the total and moment 1
// the expectation.
Coeff expectation(const Dist& p);
Coeff moment(const Dist& p, unsigned n);

// For keys that are pairs of coefficient atoms: sum p(r,s) * r * s.
Coeff mixed_moment(const Dist& p);

// Conditioning: reweight by the event and renormalize by its integral,
// (p |- phi) * lambda^-1 with lambda the integral of phi against p.
// Requires a probability input unless require_probability is cleared, which
// admits any p whose lambda is invertible.
Dist condition(const Dist& p, const Fn& event, bool require_probability = true);

// Both sides of the sum-of-coordinates expectation identity for a joint
// distribution over pairs of coefficient atoms: lhs pushes the joint along
// coordinate addition, rhs adds the marginal expectations.
std::pair<Coeff, Coeff> expectation_of_sum(const Dist& joint);

// Both sides of the affine equivariance identity for a probability p on the
// scalar space: lhs is a*E(p) + b, rhs the expectation of the image of p
// under x -> a*x + b. Errc::not_probability if total(p) != one.
std::pair<Coeff, Coeff> affine_push_expectation(const Dist& p, const Coeff& a,
                                                const Coeff& b);

}  // namespace rigdist

#endif
