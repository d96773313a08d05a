// Acceptance suite: exercises the full stack at its contract points and
// prints one PASS/FAIL line per criterion. Usage:
//
//   rigdist-acceptance <path-to-cli> <golden-dir>
//
// Exits nonzero if any criterion fails. Everything is exact arithmetic; there
// are no tolerances anywhere.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "rigdist/json_io.hpp"
#include "rigdist/lawcheck.hpp"
#include "rigdist/probability.hpp"
#include "rigdist/schwartz.hpp"
#include "rigdist/strength.hpp"

using namespace rigdist;

namespace {

std::string g_cli;
std::string g_golden;
int g_failures = 0;

void report(int number, const std::string& what, bool passed,
            const std::string& detail = "") {
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << number << ": "
            << what;
  if (!passed && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!passed) ++g_failures;
}

const LawReport* find_law(const std::vector<LawReport>& reports,
                          const std::string& name) {
  for (const auto& r : reports)
    if (r.law == name) return &r;
  return nullptr;
}

bool laws_pass(const std::vector<LawReport>& reports,
               const std::vector<std::string>& names, std::string& detail,
               std::size_t min_cases = 1) {
  for (const auto& name : names) {
    const LawReport* r = find_law(reports, name);
    if (!r) {
      detail = "missing law " + name;
      return false;
    }
    if (!r->passed()) {
      detail = name + " has violations";
      return false;
    }
    if (r->cases < min_cases) {
      detail = name + " ran only " + std::to_string(r->cases) + " cases";
      return false;
    }
  }
  return true;
}

Element A(const std::string& s) { return Element::atom(s); }

// --- criteria 1-4 and 6: the law suite at its required scales --------------

const std::vector<std::string> kMonadFunctorLaws = {
    "monad.left-unit", "monad.right-unit", "monad.associativity",
    "functor.identity", "functor.composition"};
const std::vector<std::string> kActionLaws = {
    "action.unit", "action.associativity", "action.reweights-integral",
    "action.total", "action.frobenius"};
const std::vector<std::string> kBiproductModuleLaws = {
    "biproduct.split-merge", "biproduct.merge-split",
    "module.add-commutative-monoid", "module.scalar-action",
    "module.add-distributes"};

struct SuiteRuns {
  std::vector<LawReport> bool_reports = run_suite(rig_boolean(), 2, 0);
  std::vector<LawReport> mod3_reports = run_suite(rig_mod(3), 2, 0);
  std::vector<LawReport> rational_reports = run_suite(rig_rational(), 2, 0);
};

void criteria_1_to_4(const SuiteRuns& runs) {
  const auto& bool_reports = runs.bool_reports;
  const auto& mod3_reports = runs.mod3_reports;
  const auto& rational_reports = runs.rational_reports;

  std::string detail;
  {
    bool passed = laws_pass(bool_reports, kMonadFunctorLaws, detail) &&
                  laws_pass(mod3_reports, kMonadFunctorLaws, detail) &&
                  laws_pass(rational_reports, kMonadFunctorLaws, detail, 500);
    std::size_t exhaustive_cases = 0;
    for (const auto& name : kMonadFunctorLaws)
      exhaustive_cases += find_law(mod3_reports, name)->cases;
    if (passed && exhaustive_cases < 1000) {
      passed = false;
      detail = "exhaustive run too small";
    }
    report(1, "monad/functor laws exhaustive on bool and mod:3, 500 seeded rational cases",
           passed, detail);
  }

  {
    bool passed = true;
    for (const char* name : {"nat", "rational", "bool", "tropical", "mod:2",
                             "mod:3"}) {
      const auto reports =
          std::string(name) == "bool"  ? bool_reports
          : std::string(name) == "mod:3" ? mod3_reports
          : std::string(name) == "rational"
              ? rational_reports
              : run_suite(rig_by_name(name), 2, 0);
      if (!laws_pass(reports, {"psi.eq-psi-tilde"}, detail)) {
        passed = false;
        detail = std::string(name) + ": " + detail;
        break;
      }
    }
    const auto mat2_reports = run_suite(rig_matrix2_nat(1), 1, 0);
    const LawReport* psi_law = find_law(mat2_reports, "psi.eq-psi-tilde");
    const LawReport* fubini_law = find_law(mat2_reports, "fubini");
    if (passed && (!psi_law || psi_law->violations.empty())) {
      passed = false;
      detail = "mat2:1 reported no psi witness";
    }
    if (passed && (!fubini_law || fubini_law->violations.empty())) {
      passed = false;
      detail = "mat2:1 reported no fubini witness";
    }
    if (passed &&
        !(laws_pass(mat2_reports, kMonadFunctorLaws, detail) &&
          laws_pass(mat2_reports,
                    {"biproduct.split-merge", "biproduct.merge-split"},
                    detail))) {
      passed = false;
      detail = "mat2:1 broke an order-insensitive law: " + detail;
    }
    report(2, "psi = psi-tilde on every commutative rig; mat2:1 yields psi and fubini witnesses",
           passed, detail);
  }

  {
    const bool passed = laws_pass(bool_reports, {"fubini"}, detail) &&
                        laws_pass(mod3_reports, {"fubini"}, detail) &&
                        laws_pass(rational_reports, {"fubini"}, detail, 500);
    report(3, "iterated integrals agree in both orders (exhaustive small carriers, 500 rational)",
           passed, detail);
  }

  {
    const bool passed = laws_pass(bool_reports, kActionLaws, detail) &&
                        laws_pass(mod3_reports, kActionLaws, detail) &&
                        laws_pass(rational_reports, kActionLaws, detail, 500);
    report(4, "action laws: unit, associativity, reweighting, total, Frobenius",
           passed, detail);
  }
}

void criterion_6(const SuiteRuns& runs) {
  std::string detail;
  const bool passed =
      laws_pass(runs.bool_reports, kBiproductModuleLaws, detail) &&
      laws_pass(runs.mod3_reports, kBiproductModuleLaws, detail);
  report(6, "biproduct isomorphism and module axioms exhaustive on bool and mod:3",
         passed, detail);
}

// --- criterion 5: convolution is polynomial multiplication ------------------

void criterion_polynomials() {
  const Rig nat = rig_natural();
  std::vector<std::pair<Element, Element>> rows;
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      rows.emplace_back(Element::pair(A(std::to_string(i)), A(std::to_string(j))),
                        A(std::to_string(i + j)));
  const ElementMap plus = ElementMap::from_pairs(std::move(rows));

  std::mt19937_64 rng(5);
  bool passed = true;
  std::string detail;
  for (int trial = 0; trial < 2000 && passed; ++trial) {
    std::vector<std::int64_t> a(5), b(5);
    for (auto& v : a) v = static_cast<std::int64_t>(rng() % 4);
    for (auto& v : b) v = static_cast<std::int64_t>(rng() % 4);

    // schoolbook oracle
    std::vector<std::int64_t> expected(9, 0);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) expected[i + j] += a[i] * b[j];

    const auto as_dist = [&](const std::vector<std::int64_t>& v) {
      std::vector<std::pair<Element, Coeff>> entries;
      for (std::size_t i = 0; i < v.size(); ++i)
        entries.emplace_back(A(std::to_string(i)), Coeff(v[i]));
      return Dist(nat, std::move(entries));
    };
    const Dist conv = convolve(as_dist(a), as_dist(b), plus);
    for (int d = 0; d < 9; ++d)
      if (conv.at(A(std::to_string(d))) != Coeff(expected[d])) {
        passed = false;
        detail = "degree " + std::to_string(d) + " at trial " +
                 std::to_string(trial);
        break;
      }
  }
  report(5, "convolution along + over nat equals schoolbook polynomial multiplication (2000 seeded pairs)",
         passed, detail);
}

// --- criterion 7: the functional layer --------------------------------------

void criterion_schwartz() {
  bool passed = true;
  std::string detail;

  const Rig b = rig_boolean();
  for (const FinSpace& X :
       {FinSpace::of_atoms({"a"}), FinSpace::of_atoms({"a", "b"})}) {
    for (const auto& x : X.elements())
      if (!extensionally_equal(tau(Dist::dirac(b, x), X),
                               dirac_functional(b, x, X))) {
        passed = false;
        detail = "tau(dirac) != dirac functional at " + x.text();
      }
  }

  // flatten compatibility over every T(T(X)) with |X| <= 2 over bool
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const auto inner = enumerate_dists(b, X, {b.one()}, 2);
  std::vector<Element> keys;
  for (const auto& d : inner) keys.push_back(dist_as_element(d));
  const auto outer = enumerate_dists(b, FinSpace{keys}, {b.one()}, 2);
  const auto phis = enumerate_functions(b, X, *b.enumerate());
  std::size_t checked = 0;
  for (const auto& m : outer)
    for (const auto& phi : phis) {
      Coeff rhs = b.zero();
      for (const auto& [key, w] : m.entries())
        rhs = b.add(rhs, b.mul(w, integrate(dist_from_element(b, key), phi)));
      if (integrate(flatten(m), phi) != rhs) {
        passed = false;
        detail = "flatten compatibility failed";
      }
      ++checked;
    }
  if (checked == 0) {
    passed = false;
    detail = "no flatten-compatibility cases ran";
  }

  // linearity: accept all tau images, reject the quadratic functional
  const Rig m3 = rig_mod(3);
  const FinSpace Xa = FinSpace::of_atoms({"a"});
  for (const auto& p : enumerate_dists(b, X, {b.one()}, 2))
    if (!check_functional_linearity(tau(p, X))) {
      passed = false;
      detail = "rejected a linear functional";
    }
  if (check_functional_linearity(quadratic_functional(m3, A("a"), Xa))) {
    passed = false;
    detail = "accepted the quadratic counterexample";
  }
  report(7, "functional layer: tau/dirac agreement, flatten compatibility, linearity check",
         passed, detail);
}

// --- criterion 8: the probability layer -------------------------------------

void criterion_probability() {
  const Rig Q = rig_rational();
  bool passed = true;
  std::string detail;
  std::mt19937_64 rng(8);

  const auto random_probability = [&](const std::vector<std::string>& atoms) {
    std::vector<std::pair<Element, Coeff>> entries;
    const std::size_t k = 1 + rng() % atoms.size();
    std::vector<std::string> pool = atoms;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = rng() % pool.size();
      entries.emplace_back(
          A(pool[j]), Q.parse(std::to_string(1 + rng() % 3) + "/" +
                              std::to_string(1 + rng() % 3)));
      pool.erase(pool.begin() + j);
    }
    return normalize(Dist(Q, std::move(entries)));
  };

  for (int trial = 0; trial < 200 && passed; ++trial) {
    const Dist p = random_probability({"a", "b", "c"});
    const Dist q = random_probability({"u", "v"});
    const auto [mp, mq] = marginals(psi(p, q));
    if (mp != p || mq != q) {
      passed = false;
      detail = "marginal reconstruction, trial " + std::to_string(trial);
    }
  }

  const std::vector<std::string> scalars = {"0", "1", "2", "1/2", "-1", "3/2"};
  for (int trial = 0; trial < 200 && passed; ++trial) {
    std::vector<std::pair<Element, Coeff>> entries;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i)
      entries.emplace_back(
          Element::pair(A(scalars[rng() % scalars.size()]),
                        A(scalars[rng() % scalars.size()])),
          Q.parse(std::to_string(1 + rng() % 4) + "/" +
                  std::to_string(1 + rng() % 3)));
    const auto [lhs, rhs] = expectation_of_sum(Dist(Q, std::move(entries)));
    if (lhs != rhs) {
      passed = false;
      detail = "sum expectation, trial " + std::to_string(trial);
    }
  }

  const std::vector<std::string> points = {"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 100 && passed; ++trial) {
    // uniform distribution on a random nonempty S, indicator of a random A
    std::vector<std::string> support;
    for (const auto& x : points)
      if (rng() % 2) support.push_back(x);
    if (support.empty()) support.push_back(points[rng() % points.size()]);
    std::vector<Element> intersection;
    std::vector<Element> event_points;
    for (const auto& x : points)
      if (rng() % 2) event_points.push_back(A(x));
    // make sure the event meets the support
    event_points.push_back(A(support[rng() % support.size()]));
    const Coeff share = *Q.try_invert(Q.parse(std::to_string(support.size())));
    std::vector<std::pair<Element, Coeff>> entries;
    for (const auto& x : support) {
      entries.emplace_back(A(x), share);
      for (const auto& e : event_points)
        if (e == A(x)) {
          intersection.push_back(A(x));
          break;
        }
    }
    const Dist uniform(Q, std::move(entries));
    std::vector<Element> carrier_elems;
    for (const auto& x : points) carrier_elems.push_back(A(x));
    const FinSpace carrier{carrier_elems};
    const Fn event = Fn::indicator(Q, carrier, event_points);
    const Dist conditioned = condition(uniform, event);
    // classical oracle: uniform on the intersection
    const Coeff inv =
        *Q.try_invert(Q.parse(std::to_string(intersection.size())));
    std::vector<std::pair<Element, Coeff>> expect_entries;
    for (const auto& x : intersection) expect_entries.emplace_back(x, inv);
    if (conditioned != Dist(Q, std::move(expect_entries))) {
      passed = false;
      detail = "conditioning, trial " + std::to_string(trial);
    }
  }

  for (int trial = 0; trial < 200 && passed; ++trial) {
    const Dist p = random_probability({"0", "1", "2", "1/2", "-1"});
    const Coeff a = Q.parse(scalars[rng() % scalars.size()]);
    const Coeff b = Q.parse(scalars[rng() % scalars.size()]);
    const auto [lhs, rhs] = affine_push_expectation(p, a, b);
    if (lhs != rhs) {
      passed = false;
      detail = "affine equivariance, trial " + std::to_string(trial);
    }
  }

  report(8, "probability layer on seeded rational cases (200/200/100/200)",
         passed, detail);
}

// --- criterion 9: CLI golden files ------------------------------------------

struct GoldenCase {
  std::string name;     // subcommand, for the coverage tally
  std::string args;     // appended after the CLI path
  std::string expected; // file under golden/expected, empty = ignore stdout
  int exit_code = 0;
};

std::string read_file(const std::string& path, bool& found) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    found = false;
    return {};
  }
  found = true;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool run_cli(const std::string& args, std::string& out, int& exit_code) {
  const std::string command = "'" + g_cli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    out.append(buffer, got);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return true;
}

void criterion_golden() {
  const std::string in = "'" + g_golden + "/inputs/";
  const auto I = [&](const char* f) { return in + f + "'"; };

  const std::vector<GoldenCase> cases = {
      {"total", "total " + I("nat_p.json"), "total_nat_p.out", 0},
      {"total", "total " + I("trop_p.json"), "total_trop_p.out", 0},
      {"push", "push " + I("nat_parity.json") + " --map " + I("map_parity.json"),
       "push_parity.out", 0},
      {"push", "push " + I("rat_u2.json") + " --map " + I("map_swap.json"),
       "push_swap.out", 0},
      {"push", "push " + I("rat_messy.json") + " --map " + I("map_id.json"),
       "push_canonicalize.out", 0},
      {"tensor", "tensor " + I("rat_u2.json") + " " + I("rat_u2.json"),
       "tensor_u2_u2.out", 0},
      {"tensor", "tensor " + I("nat_p.json") + " " + I("nat_q.json"),
       "tensor_p_q.out", 0},
      {"convolve", "convolve " + I("nat_p.json") + " " + I("nat_p.json") +
                       " --op add",
       "convolve_p_p.out", 0},
      {"convolve", "convolve " + I("nat_p.json") + " " + I("nat_q.json") +
                       " --map " + I("map_pair_add.json"),
       "convolve_p_q.out", 0},
      {"marginal", "marginal " + I("nat_joint.json") + " --axis 0",
       "marginal_axis0.out", 0},
      {"marginal", "marginal " + I("nat_joint.json") + " --axis 1",
       "marginal_axis1.out", 0},
      {"expect", "expect " + I("nat_d5.json"), "expect_d5.out", 0},
      {"expect", "expect " + I("rat_scal.json"), "expect_scal.out", 0},
      {"moment", "moment " + I("rat_scal.json") + " --n 0", "moment_n0.out", 0},
      {"moment", "moment " + I("rat_scal.json") + " --n 2", "moment_n2.out", 0},
      {"mixed-moment", "mixed-moment " + I("rat_joint.json"),
       "mixed_moment_joint.out", 0},
      {"mixed-moment", "mixed-moment " + I("nat_joint_scal.json"),
       "mixed_moment_nat.out", 0},
      {"integrate", "integrate " + I("rat_u2.json") + " --fn " + I("rat_phi.json"),
       "integrate_u2_phi.out", 0},
      {"integrate", "integrate " + I("trop_p.json") + " --fn " + I("trop_phi.json"),
       "integrate_trop.out", 0},
      {"act", "act " + I("rat_u2.json") + " --fn " + I("rat_ind_a.json"),
       "act_ind_a.out", 0},
      {"act", "act " + I("rat_u3.json") + " --fn " + I("rat_ind_ab.json"),
       "act_ind_ab.out", 0},
      {"condition", "condition " + I("rat_u3.json") + " --event " +
                        I("rat_ind_ab.json"),
       "condition_u3_ab.out", 0},
      {"condition", "condition " + I("rat_u2.json") + " --event " +
                        I("rat_ind_a.json"),
       "condition_u2_a.out", 0},
      {"normalize", "normalize " + I("rat_heavy.json"), "normalize_heavy.out", 0},
      {"normalize", "normalize " + I("rat_u2.json"), "normalize_u2.out", 0},
      {"check-laws", "check-laws --rig bool --size 2", "check_laws_bool.out", 0},
      {"check-laws", "check-laws --rig mat2:1 --size 1", "check_laws_mat2.out",
       5},
  };

  bool passed = true;
  std::string detail;
  std::map<std::string, int> coverage;
  for (const auto& c : cases) {
    std::string out;
    int code = -1;
    if (!run_cli(c.args, out, code)) {
      passed = false;
      detail = "could not launch CLI for " + c.name;
      break;
    }
    if (code != c.exit_code) {
      passed = false;
      detail = c.name + " exited " + std::to_string(code) + ", expected " +
               std::to_string(c.exit_code) + " (" + c.expected + ")";
      break;
    }
    bool found = false;
    const std::string want =
        read_file(g_golden + "/expected/" + c.expected, found);
    if (!found) {
      passed = false;
      detail = "missing golden file " + c.expected;
      break;
    }
    if (out != want) {  // byte-exact
      passed = false;
      detail = "output mismatch for " + c.expected;
      break;
    }
    ++coverage[c.name];
  }
  if (passed)
    for (const auto& [name, count] : coverage)
      if (count < 2) {
        passed = false;
        detail = "subcommand " + name + " has fewer than two golden cases";
      }
  report(9, "CLI golden files byte-exact; check-laws exits 0 on bool and 5 on mat2:1",
         passed, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: rigdist-acceptance <cli-path> <golden-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_golden = argv[2];

  const SuiteRuns runs;
  criteria_1_to_4(runs);
  criterion_polynomials();
  criterion_6(runs);
  criterion_schwartz();
  criterion_probability();
  criterion_golden();

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " criteria failed\n";
  return 1;
}
