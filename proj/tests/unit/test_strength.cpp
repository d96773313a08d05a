#include <doctest.h>

#include "rigdist/lawcheck.hpp"
#include "rigdist/strength.hpp"

using namespace rigdist;

namespace {

const Rig nat = rig_natural();
Coeff N(std::int64_t v) { return Coeff(v); }
Element A(const char* s) { return Element::atom(s); }

}  // namespace

TEST_CASE("tensorial strength re-keys without touching weights") {
  const Dist p(nat, {{A("a"), N(2)}});
  const Dist lifted = strength_left(p, A("y"));
  CHECK(lifted.at(Element::pair(A("a"), A("y"))) == N(2));
  CHECK(strength_left(Dist::dirac(nat, A("x")), A("y")) ==
        Dist::dirac(nat, Element::pair(A("x"), A("y"))));
  CHECK(total(lifted) == total(p));

  const Dist q(nat, {{A("b"), N(3)}});
  CHECK(strength_right(A("x"), q).at(Element::pair(A("x"), A("b"))) == N(3));
  CHECK(strength_right(A("x"), Dist::dirac(nat, A("y"))) ==
        Dist::dirac(nat, Element::pair(A("x"), A("y"))));
}

TEST_CASE("projection recovers the strengthened factor") {
  const Dist q(nat, {{A("u"), N(1)}, {A("v"), N(4)}});
  const Dist lifted = strength_right(A("x"), q);
  std::vector<std::pair<Element, Element>> rows;
  for (const auto& [key, w] : lifted.entries())
    rows.emplace_back(key, key.second());
  CHECK(pushforward(ElementMap::from_pairs(std::move(rows)), lifted) == q);
}

TEST_CASE("psi multiplies weights in argument order") {
  CHECK(psi(Dist::dirac(nat, A("x")), Dist::dirac(nat, A("y"))) ==
        Dist::dirac(nat, Element::pair(A("x"), A("y"))));

  const Dist p(nat, {{A("a"), N(2)}});
  const Dist q(nat, {{A("b"), N(3)}});
  // product-of-weights oracle: every (x,y) carries p(x)*q(y)
  const Dist t = psi(p, q);
  for (const auto& [key, w] : t.entries())
    CHECK(w == nat.mul(p.at(key.first()), q.at(key.second())));
  CHECK(t.at(Element::pair(A("a"), A("b"))) == N(6));
}

TEST_CASE("the strength composite computes the same tensor") {
  const Rig q = rig_rational();
  const Dist p1(q, {{A("a"), q.parse("1/2")}, {A("b"), q.parse("2")}});
  const Dist p2(q, {{A("u"), q.parse("3")}, {A("v"), q.parse("-1/3")}});
  CHECK(psi_via_strength(p1, p2) == psi(p1, p2));
  CHECK(psi_tilde_via_strength(p1, p2) == psi_tilde(p1, p2));
  CHECK(psi(p1, p2) == psi_tilde(p1, p2));  // rationals commute
}

TEST_CASE("a noncommutative rig separates psi from psi_tilde") {
  const Rig m = rig_matrix2_nat(1);
  const auto values = *m.enumerate();
  bool found = false;
  for (const auto& a : values) {
    for (const auto& b : values) {
      const Dist p(m, {{A("x"), a}});
      const Dist q(m, {{A("y"), b}});
      if (psi(p, q) != psi_tilde(p, q)) {
        found = true;
        // exactly the weight order differs
        CHECK(psi(p, q).at(Element::pair(A("x"), A("y"))) == m.mul(a, b));
        CHECK(psi_tilde(p, q).at(Element::pair(A("x"), A("y"))) == m.mul(b, a));
      }
    }
  }
  CHECK(found);
}

TEST_CASE("cotensor strength evaluates function keys pointwise") {
  const FinSpace dom = FinSpace::of_atoms({"a"});
  const Rig b = rig_boolean();

  // s = dirac(f) gives x -> dirac(f(x))
  const Fn f = Fn::constant_one(b, dom);
  const Dist s = Dist::dirac(b, f.as_element());
  const Kernel table = cotensor_strength(s, dom);
  CHECK(table.apply(A("a")) ==
        Dist::dirac(b, Element::atom(b.format(b.one()))));

  // zero distribution gives the constant zero table
  const Kernel ztable = cotensor_strength(Dist::zero(b), dom);
  CHECK(ztable.apply(A("a")).is_zero());

  // two functions superpose their values
  const Rig n = rig_natural();
  const Fn g1(n, dom, {{A("a"), N(3)}});
  const Fn g2(n, dom, {{A("a"), N(5)}});
  const Dist s2(n, {{g1.as_element(), N(1)}, {g2.as_element(), N(1)}});
  const Dist at_a = cotensor_strength(s2, dom).apply(A("a"));
  CHECK(at_a.at(A("3")) == N(1));
  CHECK(at_a.at(A("5")) == N(1));
}

TEST_CASE("cotensor strength is pushforward along evaluation") {
  const Rig n = rig_natural();
  const FinSpace dom = FinSpace::of_atoms({"a", "b"});
  const Fn g1(n, dom, {{A("a"), N(3)}, {A("b"), N(0)}});
  const Fn g2(n, dom, {{A("a"), N(5)}, {A("b"), N(3)}});
  const Dist s(n, {{g1.as_element(), N(2)}, {g2.as_element(), N(1)}});
  const Kernel table = cotensor_strength(s, dom);
  for (const auto& x : dom.elements()) {
    std::vector<std::pair<Element, Element>> ev_rows;
    for (const auto& [key, w] : s.entries()) {
      const Fn f = fn_from_element(n, dom, key);
      ev_rows.emplace_back(key, Element::atom(n.format(f.at(x))));
    }
    const ElementMap ev_x = ElementMap::from_pairs(std::move(ev_rows));
    CHECK(table.apply(x) == pushforward(ev_x, s));
  }
}

TEST_CASE("linearity predicates accept the strengths and psi") {
  const Rig b = rig_boolean();
  const FinSpace X = FinSpace::of_atoms({"a", "b"});
  const FinSpace Y = FinSpace::of_atoms({"u"});
  const auto pool = std::vector<Coeff>{b.one()};
  const auto dx = enumerate_dists(b, X, pool, 2);
  std::vector<Element> keys;
  for (const auto& d : dx) keys.push_back(dist_as_element(d));
  const auto t2 = enumerate_dists(b, FinSpace{keys}, pool, 2);

  std::vector<std::pair<Dist, Element>> grid1;
  for (const auto& m : t2)
    for (const auto& y : Y.elements()) grid1.emplace_back(m, y);
  CHECK(is_linear_1(
      [](const Dist& p, const Element& y) { return strength_left(p, y); },
      grid1));

  const auto dy = enumerate_dists(b, Y, pool, 1);
  std::vector<std::pair<Dist, Element>> grid_psi;
  for (const auto& m : t2)
    for (const auto& q : dy) grid_psi.emplace_back(m, dist_as_element(q));
  CHECK(is_linear_1(
      [&](const Dist& p, const Element& q_elem) {
        return psi(p, dist_from_element(b, q_elem));
      },
      grid_psi));

  std::vector<std::pair<Element, Dist>> grid2;
  for (const auto& x : X.elements())
    for (const auto& m : t2) grid2.emplace_back(x, m);
  CHECK(is_linear_2(
      [](const Element& x, const Dist& q) { return strength_right(x, q); },
      grid2));
}

TEST_CASE("psi is bilinear exactly when the rig commutes") {
  const auto build_grids = [](const Rig& rig, std::size_t points) {
    const FinSpace X = FinSpace::of_atoms({"a"});
    const auto pool = rig.sample_pool(points, 3);
    const auto dx = enumerate_dists(rig, X, pool, 1);
    std::vector<Element> keys;
    for (const auto& d : dx) keys.push_back(dist_as_element(d));
    const auto t2 = enumerate_dists(rig, FinSpace{keys}, pool, 2);
    std::vector<std::pair<Dist, Dist>> grid1, grid2;
    for (const auto& m : t2)
      for (const auto& q : dx) {
        grid1.emplace_back(m, q);
        grid2.emplace_back(q, m);
      }
    return std::make_pair(grid1, grid2);
  };

  const Rig b = rig_boolean();
  const auto [bg1, bg2] = build_grids(b, 1);
  CHECK(is_bilinear(
      [](const Dist& p, const Dist& q) { return psi(p, q); }, bg1, bg2));

  const Rig m = rig_matrix2_nat(1);
  const auto [mg1, mg2] = build_grids(m, 6);
  CHECK_FALSE(is_bilinear(
      [](const Dist& p, const Dist& q) { return psi(p, q); }, mg1, mg2));
  // 1-linearity still holds there
  std::vector<std::pair<Dist, Element>> first_only;
  for (const auto& [mm, q] : mg1)
    first_only.emplace_back(mm, dist_as_element(q));
  CHECK(is_linear_1(
      [&](const Dist& p, const Element& q_elem) {
        return psi(p, dist_from_element(m, q_elem));
      },
      first_only));
}
