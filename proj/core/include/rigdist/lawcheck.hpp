#ifndef RIGDIST_LAWCHECK_HPP
#define RIGDIST_LAWCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigdist/dist.hpp"

namespace rigdist {

// One checked law. Violations carry the fully serialized inputs plus both
// sides, so a failure can be replayed by hand. Empty violations <=> pass.
struct LawViolation {
  std::string inputs;  // JSON object text naming each input
  std::string lhs;
  std::string rhs;
};

struct LawReport {
  std::string law;
  std::size_t cases = 0;
  std::vector<LawViolation> violations;
  bool passed() const { return violations.empty(); }
};

// {"law":...,"cases":...,"violations":[...]} on a single line.
std::string report_json_line(const LawReport& report);

// All distributions with support inside the carrier, coefficients drawn from
// the pool (zeros are pruned), and support size at most max_support, in
// canonical order. Errc::cap_exceeded when the count would pass cap.
std::vector<Dist> enumerate_dists(const Rig& rig, const FinSpace& carrier,
                                  const std::vector<Coeff>& pool,
                                  std::size_t max_support,
                                  std::size_t cap = 20000);

// Brute-force verification of the algebraic laws on small instances, checked
// against naive summation formulas written in this module rather than the
// library fast paths (agreement of the two is itself one of the laws).
//
// Enumerable rigs run exhaustively while the case spaces stay within the
// harness caps (always the case at size <= 2); anything larger, and every
// rig without a finite carrier, runs on seeded samples. Reports are sorted
// by law name and are byte-identical for identical (rig, size, seed).
//
// Laws that hold only over a commutative rig are omitted for noncommutative
// rigs, except the two commutativity witnesses (psi = psi-tilde and the
// iterated-integral exchange), which always run and are expected to fail
// there. size must lie in 1..3.
std::vector<LawReport> run_suite(const Rig& rig, std::size_t size,
                                 std::uint64_t seed);

}  // namespace rigdist

#endif
