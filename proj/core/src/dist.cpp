#include "rigdist/dist.hpp"

#include <algorithm>

namespace rigdist {

namespace {

void canonicalize(const Rig& rig,
                  std::vector<std::pair<Element, Coeff>>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Element, Coeff>> out;
  out.reserve(entries.size());
  for (auto& [x, w] : entries) {
    if (!out.empty() && out.back().first == x)
      out.back().second = rig.add(out.back().second, w);
    else
      out.emplace_back(std::move(x), std::move(w));
  }
  std::erase_if(out, [&](const auto& e) { return rig.is_zero(e.second); });
  entries = std::move(out);
}

}  // namespace

Dist::Dist(Rig rig, std::vector<std::pair<Element, Coeff>> entries)
    : rig_(std::move(rig)), entries_(std::move(entries)) {
  canonicalize(rig_, entries_);
}

Dist Dist::dirac(const Rig& rig, const Element& x) {
  return Dist(rig, {{x, rig.one()}});
}

Coeff Dist::at(const Element& x) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x,
      [](const auto& e, const Element& key) { return e.first < key; });
  if (it == entries_.end() || it->first != x) return rig_.zero();
  return it->second;
}

Dist Dist::with_carrier(FinSpace carrier) const {
  for (const auto& [x, w] : entries_)
    if (!carrier.contains(x))
      raise(Errc::carrier_mismatch, "support escapes carrier at " + x.text());
  Dist d = *this;
  d.carrier_ = std::move(carrier);
  return d;
}

Dist DistBuilder::take() { return Dist(rig_, std::move(entries_)); }

Coeff total(const Dist& p) {
  Coeff sum = p.rig().zero();
  for (const auto& [x, w] : p.entries()) sum = p.rig().add(sum, w);
  return sum;
}

Dist pushforward(const ElementMap& f, const Dist& p) {
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries()) out.accumulate(f.apply(x), w);
  return out.take();
}

Kernel Kernel::from_pairs(std::vector<std::pair<Element, Dist>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i - 1].first == pairs[i].first)
      raise(Errc::parse, "kernel with duplicate key " + pairs[i].first.text());
  Kernel k;
  k.pairs_ = std::move(pairs);
  return k;
}

const Dist& Kernel::apply(const Element& x) const {
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const auto& row, const Element& key) { return row.first < key; });
  if (it == pairs_.end() || it->first != x)
    raise(Errc::map_incomplete, "kernel undefined at " + x.text());
  return it->second;
}

Dist flatten(const Dist& m) {
  DistBuilder out(m.rig());
  for (const auto& [key, outer] : m.entries()) {
    Dist inner = Dist::zero(m.rig());
    try {
      inner = dist_from_element(m.rig(), key);
    } catch (const Error&) {
      raise(Errc::rig_mismatch,
            "key is not a distribution over rig " + m.rig().name() + ": " +
                key.text());
    }
    for (const auto& [x, w] : inner.entries())
      out.accumulate(x, m.rig().mul(outer, w));
  }
  return out.take();
}

Dist bind(const Dist& p, const Kernel& k) {
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries()) {
    const Dist& target = k.apply(x);
    if (target.rig() != p.rig()) raise(Errc::rig_mismatch, "bind");
    for (const auto& [y, v] : target.entries())
      out.accumulate(y, p.rig().mul(w, v));
  }
  return out.take();
}

Dist add(const Dist& p, const Dist& q) {
  if (p.rig() != q.rig()) raise(Errc::rig_mismatch, "add");
  auto entries = p.entries();
  entries.insert(entries.end(), q.entries().begin(), q.entries().end());
  return Dist(p.rig(), std::move(entries));
}

Dist scalar_mul(const Dist& p, const Coeff& scalar) {
  DistBuilder out(p.rig());
  for (const auto& [x, w] : p.entries())
    out.accumulate(x, p.rig().mul(w, scalar));
  return out.take();
}

std::pair<Dist, Dist> phi_split(const Dist& p) {
  DistBuilder left(p.rig());
  DistBuilder right(p.rig());
  for (const auto& [x, w] : p.entries()) {
    if (x.kind() == Element::Kind::left)
      left.accumulate(x.tagged(), w);
    else if (x.kind() == Element::Kind::right)
      right.accumulate(x.tagged(), w);
    else
      raise(Errc::untagged_element, x.text());
  }
  return {left.take(), right.take()};
}

Dist phi_merge(const Dist& px, const Dist& py) {
  if (px.rig() != py.rig()) raise(Errc::rig_mismatch, "phi_merge");
  DistBuilder out(px.rig());
  for (const auto& [x, w] : px.entries())
    out.accumulate(Element::tag_left(x), w);
  for (const auto& [y, w] : py.entries())
    out.accumulate(Element::tag_right(y), w);
  return out.take();
}

Element dist_as_element(const Dist& p) {
  Element::TableRows rows;
  rows.reserve(p.entries().size());
  for (const auto& [x, w] : p.entries())
    rows.emplace_back(x, p.rig().format(w));
  return Element::fn_table(std::move(rows));
}

Dist dist_from_element(const Rig& rig, const Element& e) {
  if (!e.is_table())
    raise(Errc::parse, "expected an embedded distribution, got " + e.text());
  std::vector<std::pair<Element, Coeff>> entries;
  entries.reserve(e.rows().size());
  for (const auto& [x, text] : e.rows()) entries.emplace_back(x, rig.parse(text));
  return Dist(rig, std::move(entries));
}

}  // namespace rigdist
