#include "rigdist/space.hpp"

#include <algorithm>

namespace rigdist {

FinSpace::FinSpace(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i - 1] == elements_[i])
      raise(Errc::parse, "space with duplicate element " + elements_[i].text());
}

FinSpace FinSpace::of_atoms(std::initializer_list<const char*> names) {
  std::vector<Element> elems;
  for (const char* n : names) elems.push_back(Element::atom(n));
  return FinSpace(std::move(elems));
}

bool FinSpace::contains(const Element& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

FinSpace product(const FinSpace& a, const FinSpace& b) {
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) out.push_back(Element::pair(x, y));
  return FinSpace(std::move(out));
}

FinSpace coproduct(const FinSpace& a, const FinSpace& b) {
  std::vector<Element> out;
  out.reserve(a.size() + b.size());
  for (const auto& x : a.elements()) out.push_back(Element::tag_left(x));
  for (const auto& y : b.elements()) out.push_back(Element::tag_right(y));
  return FinSpace(std::move(out));
}

FinSpace unit_space() { return FinSpace({unit_element()}); }

}  // namespace rigdist
