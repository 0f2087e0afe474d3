#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sp16/cdnumber.hpp"

namespace sp16 {

/// Finite set of same-level CDNumbers, kept sorted in canonical order with
/// duplicates removed. Input order never affects the stored value.
class ElementSet {
 public:
  explicit ElementSet(int level = 0);
  ElementSet(int level, std::vector<CDNumber> elements);
  /// Level taken from the first element; an empty list yields level 0.
  ElementSet(std::initializer_list<CDNumber> elements);

  int level() const { return level_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<CDNumber>& elements() const { return elements_; }
  const CDNumber& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const CDNumber& x) const;
  bool contains_zero() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  int level_;
  std::vector<CDNumber> elements_;
};

/// Convenience: real numbers as a set at `level`.
ElementSet real_set(int level, std::initializer_list<Rational> values);

struct SetFlags {
  bool inverse_closed = false;
  bool all_niner = false;
  bool single_privileged_orthant = false;

  friend bool operator==(const SetFlags&, const SetFlags&) = default;
};

bool is_inverse_closed(const ElementSet& a);
/// False for sets below level 4.
bool is_all_niner(const ElementSet& a);

/// Union of the nonzero-coordinate indices over all elements.
std::vector<std::size_t> coordinate_support(const ElementSet& a);

/// Every element is strictly positive (or every element strictly negative)
/// on each coordinate of the set's support, and zero off it: the set sits
/// inside one privileged orthant of the coordinate subspace it spans.
bool lies_in_single_privileged_orthant(const ElementSet& a);

SetFlags compute_flags(const ElementSet& a);

}  // namespace sp16
