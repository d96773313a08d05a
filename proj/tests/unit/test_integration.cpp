#include <doctest.h>

#include <vector>

#include "rigdist/integration.hpp"

using namespace rigdist;

namespace {

const Rig nat = rig_natural();
Coeff N(std::int64_t v) { return Coeff(v); }
Element A(const char* s) { return Element::atom(s); }

// distribution over natural-number atoms from a dense coefficient vector;
// index i becomes the key "i"
Dist poly(const Rig& rig, const std::vector<std::int64_t>& coeffs) {
  std::vector<std::pair<Element, Coeff>> entries;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    entries.emplace_back(Element::atom(std::to_string(i)), Coeff(coeffs[i]));
  return Dist(rig, std::move(entries));
}

// schoolbook polynomial multiplication, the independent oracle
std::vector<std::int64_t> school_mul(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

ElementMap nat_addition(std::size_t degree_cap) {
  std::vector<std::pair<Element, Element>> rows;
  for (std::size_t i = 0; i <= degree_cap; ++i)
    for (std::size_t j = 0; j <= degree_cap; ++j)
      rows.emplace_back(
          Element::pair(Element::atom(std::to_string(i)),
                        Element::atom(std::to_string(j))),
          Element::atom(std::to_string(i + j)));
  return ElementMap::from_pairs(std::move(rows));
}

}  // namespace

TEST_CASE("integrate is the weighted sum") {
  const Rig q = rig_rational();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const Dist p(q, {{A("a"), q.parse("1/2")}, {A("b"), q.parse("1/2")}});
  const Fn phi(q, X, {{A("a"), q.parse("2")}, {A("b"), q.parse("4")}});
  // oracle: 1/2*2 + 1/2*4 = 3
  CHECK(integrate(p, phi) == q.parse("3"));
  CHECK(integrate_via_flatten(p, phi) == q.parse("3"));

  const Fn psi_fn(q, X, {{A("a"), q.parse("7")}, {A("b"), q.parse("0")}});
  CHECK(integrate(Dist::dirac(q, A("a")), psi_fn) == q.parse("7"));
}

TEST_CASE("integrate over the tropical rig is a min-plus sum") {
  const Rig t = rig_tropical();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const Dist p(t, {{A("a"), t.parse("1")}, {A("b"), t.parse("0")}});
  const Fn phi(t, X, {{A("a"), t.parse("0")}, {A("b"), t.parse("5")}});
  // min(1+0, 0+5) = 1
  CHECK(integrate(p, phi) == t.parse("1"));
}

TEST_CASE("scalar monoid agrees with the rig product") {
  CHECK(scalar_monoid_unit(nat) == nat.one());
  CHECK(scalar_monoid_mul(nat, N(2), N(3)) == N(6));
  CHECK(scalar_monoid_mul_via_psi(nat, N(2), N(3)) == N(6));
  const Rig m5 = rig_mod(5);
  const auto values = *m5.enumerate();
  for (const auto& a : values)
    for (const auto& b : values)
      CHECK(scalar_monoid_mul_via_psi(m5, a, b) == m5.mul(a, b));
  CHECK(scalar_monoid_mul(nat, scalar_monoid_unit(nat), N(9)) == N(9));
}

TEST_CASE("the action reweights pointwise") {
  const Rig q = rig_rational();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const Dist p(q, {{A("a"), q.parse("1/2")}, {A("b"), q.parse("1/2")}});

  CHECK(act(p, Fn::constant_one(q, X)) == p);

  const Fn ind(q, X, {{A("a"), q.parse("1")}, {A("b"), q.parse("0")}});
  const Dist kept = act(p, ind);
  CHECK(kept.support_size() == 1);
  CHECK(kept.at(A("a")) == q.parse("1/2"));

  CHECK(act(Dist::zero(q), ind).is_zero());
  CHECK(act_via_strength(p, ind) == act(p, ind));

  // a constant function acts as the scalar
  const Fn half = Fn::constant(q, X, q.parse("1/2"));
  CHECK(act(p, half) == scalar_mul(p, q.parse("1/2")));
}

TEST_CASE("action laws: unitary, associative, Frobenius") {
  const Rig q = rig_rational();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const FinSpace Y = FinSpace::of_atoms({"u"});
  const Dist p(q, {{A("a"), q.parse("2")}, {A("b"), q.parse("-1/3")}});
  const Fn f1(q, X, {{A("a"), q.parse("1/2")}, {A("b"), q.parse("3")}});
  const Fn f2(q, X, {{A("a"), q.parse("-2")}, {A("b"), q.parse("0")}});

  CHECK(act(act(p, f1), f2) == act(p, f1.pointwise_mul(f2)));

  const ElementMap to_u =
      ElementMap::from_pairs({{A("a"), A("u")}, {A("b"), A("u")}});
  const Fn phi(q, Y, {{A("u"), q.parse("5/2")}});
  const Fn composed(q, X, {{A("a"), phi.at(A("u"))}, {A("b"), phi.at(A("u"))}});
  CHECK(pushforward(to_u, act(p, composed)) == act(pushforward(to_u, p), phi));

  // reweighting under the integral
  CHECK(integrate(act(p, f2), f1) == integrate(p, f1.pointwise_mul(f2)));
  // total of the action is the integral
  CHECK(total(act(p, f1)) == integrate(p, f1));
}

TEST_CASE("convolution along + multiplies polynomials") {
  const Dist p = poly(nat, {1, 1});  // 1 + x
  const ElementMap plus = nat_addition(4);
  const Dist conv = convolve(p, p, plus);
  // (1+x)^2 = 1 + 2x + x^2, via the schoolbook oracle
  const auto expected = school_mul({1, 1}, {1, 1});
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(conv.at(Element::atom(std::to_string(i))) == N(expected[i]));
  CHECK(conv.support_size() == 3);
}

TEST_CASE("convolution units and totals") {
  const ElementMap plus = nat_addition(4);
  CHECK(convolve(Dist::dirac(nat, A("1")), Dist::dirac(nat, A("2")), plus) ==
        Dist::dirac(nat, A("3")));

  const Dist p = poly(nat, {1, 2, 3});
  const Dist q = poly(nat, {0, 1, 1});
  CHECK(total(convolve(p, q, plus)) == nat.mul(total(p), total(q)));
}

TEST_CASE("convolution along + is commutative and associative on naturals") {
  const ElementMap plus = nat_addition(12);
  const Dist p = poly(nat, {1, 2});
  const Dist q = poly(nat, {3, 0, 1});
  const Dist r = poly(nat, {2, 1});
  CHECK(convolve(p, q, plus) == convolve(q, p, plus));
  CHECK(convolve(convolve(p, q, plus), r, plus) ==
        convolve(p, convolve(q, r, plus), plus));
}

TEST_CASE("integration is bilinear over a commutative rig") {
  const Rig q = rig_rational();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const Dist p(q, {{A("a"), q.parse("1/2")}, {A("b"), q.parse("3")}});
  const Dist r(q, {{A("b"), q.parse("-1/4")}});
  const Fn f1(q, X, {{A("a"), q.parse("2")}, {A("b"), q.parse("1/3")}});
  const Fn f2(q, X, {{A("a"), q.parse("0")}, {A("b"), q.parse("5")}});
  const Coeff lambda = q.parse("7/2");

  CHECK(integrate(add(p, r), f1) == q.add(integrate(p, f1), integrate(r, f1)));
  CHECK(integrate(scalar_mul(p, lambda), f1) ==
        q.mul(integrate(p, f1), lambda));
  CHECK(integrate(p, f1.pointwise_add(f2)) ==
        q.add(integrate(p, f1), integrate(p, f2)));
  CHECK(integrate(p, f1.scaled_right(lambda)) ==
        q.mul(integrate(p, f1), lambda));
}

TEST_CASE("rig mismatch and missing values are reported") {
  const Rig q = rig_rational();
  const FinSpace X = FinSpace::of_atoms({"a"});
  const Dist p(nat, {{A("a"), N(1)}});
  CHECK_THROWS_AS((void)integrate(p, Fn::constant_one(q, X)), Error);
  const Fn small(nat, X, {{A("a"), N(1)}});
  const Dist wide(nat, {{A("a"), N(1)}, {A("b"), N(1)}});
  CHECK_THROWS_AS((void)act(wide, small), Error);
}
