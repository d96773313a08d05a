#include "rigdist/probability.hpp"

namespace rigdist {

bool is_probability(const Dist& p) { return p.rig().is_one(total(p)); }

Dist normalize(const Dist& p) {
  const Coeff t = total(p);
  const auto inverse = p.rig().try_invert(t);
  if (!inverse)
    raise(Errc::not_invertible,
          "total " + p.rig().format(t) + " has no inverse in rig " +
              p.rig().name());
  return scalar_mul(p, *inverse);
}

std::pair<Dist, Dist> marginals(const Dist& p) {
  DistBuilder first(p.rig());
  DistBuilder second(p.rig());
  for (const auto& [x, w] : p.entries()) {
    if (!x.is_pair()) raise(Errc::unpaired_element, x.text());
    first.accumulate(x.first(), w);
    second.accumulate(x.second(), w);
  }
  return {first.take(), second.take()};
}

Coeff expectation(const Dist& p) { return moment(p, 1); }

Coeff moment(const Dist& p, unsigned n) {
  const Rig& rig = p.rig();
  Coeff sum = rig.zero();
  for (const auto& [x, w] : p.entries())
    sum = rig.add(sum, rig.mul(w, rig.pow(coeff_of_atom(rig, x), n)));
  return sum;
}

Coeff mixed_moment(const Dist& p) {
  const Rig& rig = p.rig();
  Coeff sum = rig.zero();
  for (const auto& [x, w] : p.entries()) {
    if (!x.is_pair()) raise(Errc::unpaired_element, x.text());
    const Coeff r = coeff_of_atom(rig, x.first());
    const Coeff s = coeff_of_atom(rig, x.second());
    sum = rig.add(sum, rig.mul(w, rig.mul(r, s)));
  }
  return sum;
}

Dist condition(const Dist& p, const Fn& event, bool require_probability) {
  if (require_probability && !is_probability(p))
    raise(Errc::not_probability, "conditioning a non-probability");
  const Coeff lambda = integrate(p, event);
  const auto inverse = p.rig().try_invert(lambda);
  if (!inverse)
    raise(Errc::not_invertible,
          "event weight " + p.rig().format(lambda) + " has no inverse");
  return scalar_mul(act(p, event), *inverse);
}

std::pair<Coeff, Coeff> expectation_of_sum(const Dist& joint) {
  const Rig& rig = joint.rig();
  DistBuilder summed(rig);
  for (const auto& [x, w] : joint.entries()) {
    if (!x.is_pair()) raise(Errc::unpaired_element, x.text());
    const Coeff r = coeff_of_atom(rig, x.first());
    const Coeff s = coeff_of_atom(rig, x.second());
    summed.accumulate(atom_of_coeff(rig, rig.add(r, s)), w);
  }
  const Coeff lhs = expectation(summed.take());
  const auto [mx, my] = marginals(joint);
  const Coeff rhs = rig.add(expectation(mx), expectation(my));
  return {lhs, rhs};
}

std::pair<Coeff, Coeff> affine_push_expectation(const Dist& p, const Coeff& a,
                                                const Coeff& b) {
  const Rig& rig = p.rig();
  if (!is_probability(p))
    raise(Errc::not_probability, "affine equivariance needs total one");
  const Coeff lhs = rig.add(rig.mul(a, expectation(p)), b);
  DistBuilder pushed(rig);
  for (const auto& [x, w] : p.entries()) {
    const Coeff image = rig.add(rig.mul(a, coeff_of_atom(rig, x)), b);
    pushed.accumulate(atom_of_coeff(rig, image), w);
  }
  return {lhs, expectation(pushed.take())};
}

}  // namespace rigdist
