#include "rigdist/element.hpp"

#include <algorithm>

namespace rigdist {

struct Element::Node {
  Kind kind;
  std::string name;        // atom
  std::vector<Element> parts;  // pair (2) or tag (1)
  TableRows rows;          // table
};

Element Element::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::atom;
  node->name = std::move(name);
  return Element(std::move(node));
}

Element Element::pair(Element first, Element second) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::pair;
  node->parts = {std::move(first), std::move(second)};
  return Element(std::move(node));
}

Element Element::tag_left(Element inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::left;
  node->parts = {std::move(inner)};
  return Element(std::move(node));
}

Element Element::tag_right(Element inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::right;
  node->parts = {std::move(inner)};
  return Element(std::move(node));
}

Element Element::fn_table(TableRows rows) {
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i - 1].first == rows[i].first)
      raise(Errc::parse, "function table with duplicate key " +
                             rows[i].first.text());
  auto node = std::make_shared<Node>();
  node->kind = Kind::table;
  node->rows = std::move(rows);
  return Element(std::move(node));
}

Element::Kind Element::kind() const { return node_->kind; }

const std::string& Element::atom_name() const { return node_->name; }

const Element& Element::first() const { return node_->parts[0]; }
const Element& Element::second() const { return node_->parts[1]; }
const Element& Element::tagged() const { return node_->parts[0]; }
const Element::TableRows& Element::rows() const { return node_->rows; }

int Element::compare(const Element& other) const {
  if (node_ == other.node_) return 0;
  const auto ka = static_cast<int>(kind());
  const auto kb = static_cast<int>(other.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (kind()) {
    case Kind::atom: {
      const int c = node_->name.compare(other.node_->name);
      return c < 0 ? -1 : c > 0 ? 1 : 0;
    }
    case Kind::pair: {
      const int c = first().compare(other.first());
      return c != 0 ? c : second().compare(other.second());
    }
    case Kind::left:
    case Kind::right:
      return tagged().compare(other.tagged());
    case Kind::table: {
      const auto& a = node_->rows;
      const auto& b = other.node_->rows;
      const std::size_t n = std::min(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i) {
        int c = a[i].first.compare(b[i].first);
        if (c != 0) return c;
        c = a[i].second.compare(b[i].second);
        if (c != 0) return c < 0 ? -1 : 1;
      }
      return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
    }
  }
  return 0;
}

std::string Element::text() const {
  switch (kind()) {
    case Kind::atom:
      return node_->name;
    case Kind::pair:
      return "(" + first().text() + "," + second().text() + ")";
    case Kind::left:
      return "L." + tagged().text();
    case Kind::right:
      return "R." + tagged().text();
    case Kind::table: {
      std::string out = "{";
      bool sep = false;
      for (const auto& [key, value] : node_->rows) {
        if (sep) out += ",";
        sep = true;
        out += key.text() + ":" + value;
      }
      return out + "}";
    }
  }
  return {};
}

const Element& unit_element() {
  static const Element star = Element::atom("*");
  return star;
}

ElementMap ElementMap::from_pairs(
    std::vector<std::pair<Element, Element>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i - 1].first == pairs[i].first)
      raise(Errc::parse, "map with duplicate key " + pairs[i].first.text());
  ElementMap m;
  m.pairs_ = std::move(pairs);
  return m;
}

const Element& ElementMap::apply(const Element& x) const {
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const auto& row, const Element& key) { return row.first < key; });
  if (it == pairs_.end() || it->first != x)
    raise(Errc::map_incomplete, "no image for " + x.text());
  return it->second;
}

bool ElementMap::defined_at(const Element& x) const {
  const auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const auto& row, const Element& key) { return row.first < key; });
  return it != pairs_.end() && it->first == x;
}

}  // namespace rigdist
