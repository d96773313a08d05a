#ifndef RIGDIST_ELEMENT_HPP
#define RIGDIST_ELEMENT_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rigdist/errors.hpp"

namespace rigdist {

// A point of a finite space: an opaque atom, a pair, a tagged coproduct
// injection, or a function table whose values are coefficient text. Values
// are immutable and share structure; the total order below is structural, so
// every container of elements has exactly one canonical form.
class Element {
 public:
  enum class Kind { atom, pair, left, right, table };

  using TableRows = std::vector<std::pair<Element, std::string>>;

  static Element atom(std::string name);
  static Element pair(Element first, Element second);
  static Element tag_left(Element inner);
  static Element tag_right(Element inner);
  // Rows are sorted by key and must have distinct keys.
  static Element fn_table(TableRows rows);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::atom; }
  bool is_pair() const { return kind() == Kind::pair; }
  bool is_tag() const { return kind() == Kind::left || kind() == Kind::right; }
  bool is_table() const { return kind() == Kind::table; }

  const std::string& atom_name() const;
  const Element& first() const;
  const Element& second() const;
  const Element& tagged() const;  // payload of a left/right tag
  const TableRows& rows() const;

  // Atoms lexicographic; composites lexicographic on parts; distinct kinds
  // ordered atom < pair < left < right < table.
  int compare(const Element& other) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.compare(b) == 0;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }
  friend bool operator<(const Element& a, const Element& b) {
    return a.compare(b) < 0;
  }

  // Compact single-line text, used in diagnostics and law witnesses.
  std::string text() const;

 private:
  struct Node;
  explicit Element(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// The distinguished point of the one-point space.
const Element& unit_element();

// A total function between spaces, as an explicit sorted table.
class ElementMap {
 public:
  ElementMap() = default;
  static ElementMap from_pairs(std::vector<std::pair<Element, Element>> pairs);

  const Element& apply(const Element& x) const;  // Errc::map_incomplete
  bool defined_at(const Element& x) const;
  const std::vector<std::pair<Element, Element>>& pairs() const {
    return pairs_;
  }

 private:
  std::vector<std::pair<Element, Element>> pairs_;  // sorted by key
};

}  // namespace rigdist

#endif
