#include "sp16/element_set.hpp"

#include <algorithm>

#include "sp16/errors.hpp"

namespace sp16 {

ElementSet::ElementSet(int level) : level_(level) {
  if (level < 0 || level > kMaxLevel) throw LevelError("ElementSet: level outside 0..4");
}

ElementSet::ElementSet(int level, std::vector<CDNumber> elements)
    : level_(level), elements_(std::move(elements)) {
  if (level < 0 || level > kMaxLevel) throw LevelError("ElementSet: level outside 0..4");
  for (const auto& x : elements_) {
    if (x.level() != level_) {
      throw LevelError("ElementSet: element " + x.to_string() + " is not at level " +
                       std::to_string(level_));
    }
  }
  std::sort(elements_.begin(), elements_.end(), CanonicalLess{});
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

ElementSet::ElementSet(std::initializer_list<CDNumber> elements)
    : ElementSet(elements.size() == 0 ? 0 : elements.begin()->level(), std::vector<CDNumber>(elements)) {}

bool ElementSet::contains(const CDNumber& x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x, CanonicalLess{});
}

bool ElementSet::contains_zero() const {
  return std::any_of(elements_.begin(), elements_.end(), [](const CDNumber& x) { return x.is_zero(); });
}

ElementSet real_set(int level, std::initializer_list<Rational> values) {
  std::vector<CDNumber> out;
  for (const auto& v : values) out.push_back(CDNumber::real(level, v));
  return ElementSet(level, std::move(out));
}

bool is_inverse_closed(const ElementSet& a) {
  if (a.contains_zero()) return false;
  return std::all_of(a.begin(), a.end(), [&](const CDNumber& x) { return a.contains(inverse(x)); });
}

bool is_all_niner(const ElementSet& a) {
  if (a.level() != kMaxLevel) return false;
  return std::all_of(a.begin(), a.end(), [](const CDNumber& x) { return is_niner(x); });
}

std::vector<std::size_t> coordinate_support(const ElementSet& a) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < dimension(a.level()); ++i) {
    if (std::any_of(a.begin(), a.end(), [i](const CDNumber& x) { return !x[i].is_zero(); })) {
      support.push_back(i);
    }
  }
  return support;
}

bool lies_in_single_privileged_orthant(const ElementSet& a) {
  if (a.empty()) return false;
  const auto support = coordinate_support(a);
  const SignClass first = sign_class_on(a[0], support);
  if (first != SignClass::AllPositive && first != SignClass::AllNegative) return false;
  return std::all_of(a.begin(), a.end(),
                     [&](const CDNumber& x) { return sign_class_on(x, support) == first; });
}

SetFlags compute_flags(const ElementSet& a) {
  return SetFlags{is_inverse_closed(a), is_all_niner(a), lies_in_single_privileged_orthant(a)};
}

}  // namespace sp16
