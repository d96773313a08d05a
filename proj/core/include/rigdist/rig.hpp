#ifndef RIGDIST_RIG_HPP
#define RIGDIST_RIG_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rigdist/coeff.hpp"

namespace rigdist {

namespace detail {
class RigOps;
}

// A commutative (or, for the witness instance, noncommutative) semiring of
// coefficients with decidable equality. Rig is a cheap value handle; rigs
// compare equal by name.
class Rig {
 public:
  Rig() = default;
  explicit Rig(std::shared_ptr<const detail::RigOps> ops) : ops_(std::move(ops)) {}

  const std::string& name() const;
  bool commutative() const;

  Coeff zero() const;
  Coeff one() const;
  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  bool eq(const Coeff& a, const Coeff& b) const { return a == b; }
  bool is_zero(const Coeff& a) const { return a == zero(); }
  bool is_one(const Coeff& a) const { return a == one(); }

  Coeff pow(const Coeff& a, unsigned n) const;

  // All coefficients, when the carrier is finite. For mat2 this is the
  // bounded entry grid used for exhaustive searches, not a closed carrier.
  std::optional<std::vector<Coeff>> enumerate() const;

  // Partial multiplicative inverse: mul(a, *r) == one when present.
  std::optional<Coeff> try_invert(const Coeff& a) const;

  std::string format(const Coeff& a) const;
  Coeff parse(const std::string& text) const;

  // Deterministic nonzero coefficient pool for law checks on this rig.
  // Enumerable rigs return every nonzero value (count is ignored); the others
  // draw from a small fixed grid, seeded.
  std::vector<Coeff> sample_pool(std::size_t count, std::uint64_t seed) const;

  friend bool operator==(const Rig& a, const Rig& b) {
    return a.name() == b.name();
  }
  friend bool operator!=(const Rig& a, const Rig& b) { return !(a == b); }

 private:
  std::shared_ptr<const detail::RigOps> ops_;
};

Rig rig_natural();
Rig rig_rational();
Rig rig_boolean();
Rig rig_tropical();
Rig rig_mod(std::uint32_t n);          // n >= 2
Rig rig_matrix2_nat(std::uint32_t cap);  // noncommutative witness; enumerates entries 0..cap

// Accepts "nat", "rational", "bool", "tropical", "mod:<n>", "mat2:<cap>".
Rig rig_by_name(const std::string& name);

// Brute-force audit of the rig axioms: exhaustive over enumerate() when the
// triple count stays within budget, otherwise seeded sampling. Violations are
// data, not errors; the mat2 instance is expected to fail mul commutativity.
struct RigAxiomViolation {
  std::string axiom;
  std::vector<std::string> witness;  // formatted coefficients
};

struct RigAxiomReport {
  std::size_t cases = 0;
  std::vector<RigAxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

RigAxiomReport check_rig_axioms(const Rig& rig, std::size_t budget,
                                std::uint64_t seed);

}  // namespace rigdist

#endif
