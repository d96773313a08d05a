#include "rigdist/strength.hpp"

namespace rigdist {

Dist strength_left(const Dist& p, const Element& y) {
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries())
    out.accumulate(Element::pair(x, y), w);
  return out.take();
}

Dist strength_right(const Element& x, const Dist& q) {
  DistBuilder out(q.rig());
  for (const auto& [y, w] : q.entries())
    out.accumulate(Element::pair(x, y), w);
  return out.take();
}

Dist psi(const Dist& p, const Dist& q) {
  if (p.rig() != q.rig()) raise(Errc::rig_mismatch, "psi");
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries())
    for (const auto& [y, v] : q.entries())
      out.accumulate(Element::pair(x, y), p.rig().mul(w, v));
  return out.take();
}

Dist psi_tilde(const Dist& p, const Dist& q) {
  if (p.rig() != q.rig()) raise(Errc::rig_mismatch, "psi_tilde");
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries())
    for (const auto& [y, v] : q.entries())
      out.accumulate(Element::pair(x, y), p.rig().mul(v, w));
  return out.take();
}

Dist psi_via_strength(const Dist& p, const Dist& q) {
  if (p.rig() != q.rig()) raise(Errc::rig_mismatch, "psi");
  // t' pairs each key of p with q as a point, T(t'') spreads q under each
  // key, and flatten collapses the two layers.
  const Dist paired = strength_left(p, dist_as_element(q));
  DistBuilder staged(p.rig());
  for (const auto& [key, w] : paired.entries()) {
    const Dist inner = dist_from_element(p.rig(), key.second());
    staged.accumulate(dist_as_element(strength_right(key.first(), inner)), w);
  }
  return flatten(staged.take());
}

Dist psi_tilde_via_strength(const Dist& p, const Dist& q) {
  if (p.rig() != q.rig()) raise(Errc::rig_mismatch, "psi_tilde");
  const Dist paired = strength_right(dist_as_element(p), q);
  DistBuilder staged(q.rig());
  for (const auto& [key, w] : paired.entries()) {
    const Dist inner = dist_from_element(q.rig(), key.first());
    staged.accumulate(dist_as_element(strength_left(inner, key.second())), w);
  }
  return flatten(staged.take());
}

Kernel cotensor_strength(const Dist& s, const FinSpace& domain) {
  std::vector<std::pair<Element, Dist>> out;
  out.reserve(domain.size());
  for (const auto& x : domain.elements()) {
    DistBuilder at_x(s.rig());
    for (const auto& [f, w] : s.entries()) {
      if (!f.is_table())
        raise(Errc::map_incomplete,
              "key is not a function element: " + f.text());
      const Fn table = fn_from_element(s.rig(), domain, f);
      at_x.accumulate(Element::atom(s.rig().format(table.at(x))), w);
    }
    out.emplace_back(x, at_x.take());
  }
  return Kernel::from_pairs(std::move(out));
}

namespace {

// gamma . T(f(-, y)) . t' ran against f . (alpha x id) on one grid point.
bool pentagon_1(const std::function<Dist(const Dist&, const Element&)>& f,
                const Dist& m, const Element& y) {
  const Dist lhs = f(flatten(m), y);
  DistBuilder staged(m.rig());
  for (const auto& [key, w] : m.entries())
    staged.accumulate(
        dist_as_element(f(dist_from_element(m.rig(), key), y)), w);
  return lhs == flatten(staged.take());
}

bool pentagon_2(const std::function<Dist(const Element&, const Dist&)>& f,
                const Element& x, const Dist& m) {
  const Dist lhs = f(x, flatten(m));
  DistBuilder staged(m.rig());
  for (const auto& [key, w] : m.entries())
    staged.accumulate(
        dist_as_element(f(x, dist_from_element(m.rig(), key))), w);
  return lhs == flatten(staged.take());
}

}  // namespace

bool is_linear_1(const std::function<Dist(const Dist&, const Element&)>& f,
                 const std::vector<std::pair<Dist, Element>>& grid) {
  for (const auto& [m, y] : grid)
    if (!pentagon_1(f, m, y)) return false;
  return true;
}

bool is_linear_2(const std::function<Dist(const Element&, const Dist&)>& f,
                 const std::vector<std::pair<Element, Dist>>& grid) {
  for (const auto& [x, m] : grid)
    if (!pentagon_2(f, x, m)) return false;
  return true;
}

bool is_bilinear(const std::function<Dist(const Dist&, const Dist&)>& f,
                 const std::vector<std::pair<Dist, Dist>>& grid1,
                 const std::vector<std::pair<Dist, Dist>>& grid2) {
  for (const auto& [m, q] : grid1) {
    const auto at_q = [&](const Dist& p, const Element&) { return f(p, q); };
    if (!pentagon_1(at_q, m, unit_element())) return false;
  }
  for (const auto& [p, n] : grid2) {
    const auto at_p = [&](const Element&, const Dist& q) { return f(p, q); };
    if (!pentagon_2(at_p, unit_element(), n)) return false;
  }
  return true;
}

}  // namespace rigdist
