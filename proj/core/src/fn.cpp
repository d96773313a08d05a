#include "rigdist/fn.hpp"

#include <algorithm>

namespace rigdist {

Fn::Fn(Rig rig, FinSpace carrier, std::vector<std::pair<Element, Coeff>> rows)
    : rig_(std::move(rig)), carrier_(std::move(carrier)), rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  if (rows_.size() != carrier_.size())
    raise(Errc::map_incomplete, "function table not total on its carrier");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].first != carrier_.elements()[i])
      raise(Errc::map_incomplete,
            "function table key set differs from carrier at " +
                rows_[i].first.text());
}

Fn Fn::constant(const Rig& rig, const FinSpace& carrier, const Coeff& value) {
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(carrier.size());
  for (const auto& x : carrier.elements()) rows.emplace_back(x, value);
  return Fn(rig, carrier, std::move(rows));
}

Fn Fn::constant_one(const Rig& rig, const FinSpace& carrier) {
  return constant(rig, carrier, rig.one());
}

Fn Fn::indicator(const Rig& rig, const FinSpace& carrier,
                 const std::vector<Element>& points) {
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(carrier.size());
  for (const auto& x : carrier.elements()) {
    const bool in = std::find(points.begin(), points.end(), x) != points.end();
    rows.emplace_back(x, in ? rig.one() : rig.zero());
  }
  return Fn(rig, carrier, std::move(rows));
}

const Coeff& Fn::at(const Element& x) const {
  const auto it = std::lower_bound(
      rows_.begin(), rows_.end(), x,
      [](const auto& row, const Element& key) { return row.first < key; });
  if (it == rows_.end() || it->first != x)
    raise(Errc::map_incomplete, "function undefined at " + x.text());
  return it->second;
}

bool Fn::defined_at(const Element& x) const {
  const auto it = std::lower_bound(
      rows_.begin(), rows_.end(), x,
      [](const auto& row, const Element& key) { return row.first < key; });
  return it != rows_.end() && it->first == x;
}

Fn Fn::pointwise_add(const Fn& other) const {
  if (rig_ != other.rig_) raise(Errc::rig_mismatch, "pointwise add");
  if (carrier_ != other.carrier_)
    raise(Errc::carrier_mismatch, "pointwise add");
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    rows.emplace_back(rows_[i].first,
                      rig_.add(rows_[i].second, other.rows_[i].second));
  return Fn(rig_, carrier_, std::move(rows));
}

Fn Fn::pointwise_mul(const Fn& other) const {
  if (rig_ != other.rig_) raise(Errc::rig_mismatch, "pointwise mul");
  if (carrier_ != other.carrier_)
    raise(Errc::carrier_mismatch, "pointwise mul");
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    rows.emplace_back(rows_[i].first,
                      rig_.mul(rows_[i].second, other.rows_[i].second));
  return Fn(rig_, carrier_, std::move(rows));
}

Fn Fn::scaled_right(const Coeff& scalar) const {
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(rows_.size());
  for (const auto& [x, v] : rows_) rows.emplace_back(x, rig_.mul(v, scalar));
  return Fn(rig_, carrier_, std::move(rows));
}

Element Fn::as_element() const {
  Element::TableRows rows;
  rows.reserve(rows_.size());
  for (const auto& [x, v] : rows_) rows.emplace_back(x, rig_.format(v));
  return Element::fn_table(std::move(rows));
}

Fn fn_from_element(const Rig& rig, const FinSpace& carrier, const Element& e) {
  if (!e.is_table())
    raise(Errc::parse, "expected a function element, got " + e.text());
  std::vector<std::pair<Element, Coeff>> rows;
  rows.reserve(e.rows().size());
  for (const auto& [x, text] : e.rows()) rows.emplace_back(x, rig.parse(text));
  return Fn(rig, carrier, std::move(rows));
}

Element atom_of_coeff(const Rig& rig, const Coeff& value) {
  return Element::atom(rig.format(value));
}

Coeff coeff_of_atom(const Rig& rig, const Element& e) {
  if (!e.is_atom())
    raise(Errc::key_not_coefficient, e.text());
  try {
    return rig.parse(e.atom_name());
  } catch (const Error&) {
    raise(Errc::key_not_coefficient, e.text());
  }
}

std::vector<Fn> enumerate_functions(const Rig& rig, const FinSpace& domain,
                                    const std::vector<Coeff>& codomain_values,
                                    std::size_t cap) {
  const std::size_t base = codomain_values.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (base == 0) {
      count = 0;
      break;
    }
    if (count > cap / base + 1) raise(Errc::cap_exceeded, "function space");
    count *= base;
  }
  if (count > cap) raise(Errc::cap_exceeded, "function space");
  if (domain.empty())
    return {Fn(rig, domain, {})};  // the unique map out of the empty space
  if (base == 0) return {};

  std::vector<Fn> out;
  out.reserve(count);
  std::vector<std::size_t> odometer(domain.size(), 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::pair<Element, Coeff>> rows;
    rows.reserve(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i)
      rows.emplace_back(domain.elements()[i], codomain_values[odometer[i]]);
    out.push_back(Fn(rig, domain, std::move(rows)));
    for (std::size_t i = domain.size(); i-- > 0;) {
      if (++odometer[i] < base) break;
      odometer[i] = 0;
    }
  }
  return out;
}

}  // namespace rigdist
