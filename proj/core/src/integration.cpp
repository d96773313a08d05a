#include "rigdist/integration.hpp"

namespace rigdist {

Coeff integrate(const Dist& p, const Fn& phi) {
  if (p.rig() != phi.rig()) raise(Errc::rig_mismatch, "integrate");
  Coeff sum = p.rig().zero();
  for (const auto& [x, w] : p.entries())
    sum = p.rig().add(sum, p.rig().mul(w, phi.at(x)));
  return sum;
}

Coeff integrate_via_flatten(const Dist& p, const Fn& phi) {
  if (p.rig() != phi.rig()) raise(Errc::rig_mismatch, "integrate");
  DistBuilder staged(p.rig());
  for (const auto& [x, w] : p.entries()) {
    const Dist on_point(p.rig(), {{unit_element(), phi.at(x)}});
    staged.accumulate(dist_as_element(on_point), w);
  }
  return flatten(staged.take()).at(unit_element());
}

Coeff scalar_monoid_unit(const Rig& rig) { return rig.one(); }

Coeff scalar_monoid_mul(const Rig& rig, const Coeff& a, const Coeff& b) {
  return rig.mul(a, b);
}

Coeff scalar_monoid_mul_via_psi(const Rig& rig, const Coeff& a,
                                const Coeff& b) {
  const Dist pa(rig, {{unit_element(), a}});
  const Dist pb(rig, {{unit_element(), b}});
  const Dist prod = psi(pa, pb);
  return prod.at(Element::pair(unit_element(), unit_element()));
}

Dist act(const Dist& p, const Fn& phi) {
  if (p.rig() != phi.rig()) raise(Errc::rig_mismatch, "act");
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries())
    out.accumulate(x, p.rig().mul(w, phi.at(x)));
  return out.take();
}

Dist act_via_strength(const Dist& p, const Fn& phi) {
  if (p.rig() != phi.rig()) raise(Errc::rig_mismatch, "act");
  // rho sends x to the distribution with weight phi(x) at x; the 1-linear
  // extension of rho is flatten after pushing p along it.
  DistBuilder staged(p.rig());
  for (const auto& [x, w] : p.entries()) {
    const Dist rho_x(p.rig(), {{x, phi.at(x)}});
    staged.accumulate(dist_as_element(rho_x), w);
  }
  return flatten(staged.take());
}

Dist convolve(const Dist& p, const Dist& q, const ElementMap& m) {
  return pushforward(m, psi(p, q));
}

}  // namespace rigdist
