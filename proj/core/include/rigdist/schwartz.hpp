#ifndef RIGDIST_SCHWARTZ_HPP
#define RIGDIST_SCHWARTZ_HPP

#include <functional>

#include "rigdist/integration.hpp"

namespace rigdist {

// A functional on test functions: the double-dual view of a distribution.
// Equality is extensional over the canonical test family of the carrier, so
// it stays decidable. eval must be pure and re-entrant.
class Functional {
 public:
  Functional(Rig rig, FinSpace carrier, std::function<Coeff(const Fn&)> eval)
      : rig_(std::move(rig)),
        carrier_(std::move(carrier)),
        eval_(std::move(eval)) {}

  const Rig& rig() const { return rig_; }
  const FinSpace& carrier() const { return carrier_; }
  Coeff eval(const Fn& phi) const { return eval_(phi); }

 private:
  Rig rig_;
  FinSpace carrier_;
  std::function<Coeff(const Fn&)> eval_;
};

// The canonical family of test functions on a carrier: every function for
// enumerable rigs, otherwise point indicators, the constant one, and a
// seeded grid of tables.
std::vector<Fn> canonical_test_family(const Rig& rig, const FinSpace& carrier,
                                      std::uint64_t seed = 0);

bool extensionally_equal(const Functional& a, const Functional& b,
                         std::uint64_t seed = 0);

// The representation of a concrete distribution as a functional:
// eval(phi) = integral of phi against p.
Functional tau(const Dist& p, const FinSpace& carrier);

// Evaluation at a point; extensionally equal to tau of the Dirac there.
Functional dirac_functional(const Rig& rig, const Element& x,
                            const FinSpace& carrier);

// A deliberately nonlinear functional, phi -> phi(x) * phi(x). On rigs with
// idempotent multiplication squaring is the identity, so pick the rig with
// care when a counterexample is wanted.
Functional quadratic_functional(const Rig& rig, const Element& x,
                                const FinSpace& carrier);

// Additivity and right homogeneity of eval over the canonical family.
bool check_functional_linearity(const Functional& f, std::uint64_t seed = 0);

// The monoidal structure on functionals: eval against phi nests the two
// evaluations with f outermost; the tilde twin puts g outermost.
Functional functional_psi(const Functional& f, const Functional& g);
Functional functional_psi_tilde(const Functional& f, const Functional& g);

// For a distribution whose keys are coefficient atoms: the value of its
// functional at the identity table, concretely sum p(r) * r.
Coeff expectation_via_ev_id(const Dist& p);

}  // namespace rigdist

#endif
