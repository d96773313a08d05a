#include "rigdist/schwartz.hpp"

#include <random>

namespace rigdist {

std::vector<Fn> canonical_test_family(const Rig& rig, const FinSpace& carrier,
                                      std::uint64_t seed) {
  if (auto all = rig.enumerate()) {
    // cap generous enough for every carrier the harness uses
    return enumerate_functions(rig, carrier, *all, 200000);
  }
  std::vector<Fn> family;
  for (const auto& x : carrier.elements())
    family.push_back(Fn::indicator(rig, carrier, {x}));
  family.push_back(Fn::constant_one(rig, carrier));
  family.push_back(Fn::constant(rig, carrier, rig.zero()));
  auto pool = rig.sample_pool(8, seed);
  pool.push_back(rig.zero());
  std::mt19937_64 eng(seed ^ 0xd1342543de82ef95ULL);
  for (int k = 0; k < 16; ++k) {
    std::vector<std::pair<Element, Coeff>> rows;
    for (const auto& x : carrier.elements())
      rows.emplace_back(x, pool[eng() % pool.size()]);
    family.push_back(Fn(rig, carrier, std::move(rows)));
  }
  return family;
}

bool extensionally_equal(const Functional& a, const Functional& b,
                         std::uint64_t seed) {
  if (a.rig() != b.rig() || !(a.carrier() == b.carrier())) return false;
  for (const auto& phi : canonical_test_family(a.rig(), a.carrier(), seed))
    if (a.eval(phi) != b.eval(phi)) return false;
  return true;
}

Functional tau(const Dist& p, const FinSpace& carrier) {
  for (const auto& [x, w] : p.entries())
    if (!carrier.contains(x))
      raise(Errc::carrier_mismatch, "support escapes carrier at " + x.text());
  return Functional(p.rig(), carrier,
                    [p](const Fn& phi) { return integrate(p, phi); });
}

Functional dirac_functional(const Rig& rig, const Element& x,
                            const FinSpace& carrier) {
  if (!carrier.contains(x))
    raise(Errc::carrier_mismatch, "point outside carrier: " + x.text());
  return Functional(rig, carrier, [x](const Fn& phi) { return phi.at(x); });
}

Functional quadratic_functional(const Rig& rig, const Element& x,
                                const FinSpace& carrier) {
  if (!carrier.contains(x))
    raise(Errc::carrier_mismatch, "point outside carrier: " + x.text());
  return Functional(rig, carrier, [rig, x](const Fn& phi) {
    return rig.mul(phi.at(x), phi.at(x));
  });
}

bool check_functional_linearity(const Functional& f, std::uint64_t seed) {
  const auto family = canonical_test_family(f.rig(), f.carrier(), seed);
  std::vector<Coeff> scalars;
  if (auto all = f.rig().enumerate())
    scalars = *all;
  else {
    scalars = f.rig().sample_pool(6, seed);
    scalars.push_back(f.rig().zero());
  }
  for (const auto& phi : family) {
    for (const auto& chi : family)
      if (f.eval(phi.pointwise_add(chi)) !=
          f.rig().add(f.eval(phi), f.eval(chi)))
        return false;
    for (const auto& lambda : scalars)
      if (f.eval(phi.scaled_right(lambda)) !=
          f.rig().mul(f.eval(phi), lambda))
        return false;
  }
  return true;
}

namespace {

Functional functional_product(const Functional& f, const Functional& g,
                              bool f_outermost) {
  if (f.rig() != g.rig()) raise(Errc::rig_mismatch, "functional_psi");
  const Rig rig = f.rig();
  const FinSpace fx = f.carrier();
  const FinSpace gy = g.carrier();
  const FinSpace joint = product(fx, gy);
  auto eval = [rig, fx, gy, f, g, f_outermost](const Fn& phi) {
    if (f_outermost) {
      // x -> g(phi(x, .)), then f of that table
      std::vector<std::pair<Element, Coeff>> outer;
      for (const auto& x : fx.elements()) {
        std::vector<std::pair<Element, Coeff>> slice;
        for (const auto& y : gy.elements())
          slice.emplace_back(y, phi.at(Element::pair(x, y)));
        outer.emplace_back(x, g.eval(Fn(rig, gy, std::move(slice))));
      }
      return f.eval(Fn(rig, fx, std::move(outer)));
    }
    std::vector<std::pair<Element, Coeff>> outer;
    for (const auto& y : gy.elements()) {
      std::vector<std::pair<Element, Coeff>> slice;
      for (const auto& x : fx.elements())
        slice.emplace_back(x, phi.at(Element::pair(x, y)));
      outer.emplace_back(y, f.eval(Fn(rig, fx, std::move(slice))));
    }
    return g.eval(Fn(rig, gy, std::move(outer)));
  };
  return Functional(rig, joint, std::move(eval));
}

}  // namespace

Functional functional_psi(const Functional& f, const Functional& g) {
  return functional_product(f, g, true);
}

Functional functional_psi_tilde(const Functional& f, const Functional& g) {
  return functional_product(f, g, false);
}

Coeff expectation_via_ev_id(const Dist& p) {
  std::vector<Element> support;
  std::vector<std::pair<Element, Coeff>> identity;
  for (const auto& [x, w] : p.entries()) {
    support.push_back(x);
    identity.emplace_back(x, coeff_of_atom(p.rig(), x));
  }
  const FinSpace carrier{std::move(support)};
  return tau(p, carrier).eval(Fn(p.rig(), carrier, std::move(identity)));
}

}  // namespace rigdist
