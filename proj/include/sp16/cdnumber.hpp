#pragma once

// Exact arithmetic on the Conway-Smith 2^n-on tower for n = 0..4
// (reals, complexes, quaternions, octonions, 16-ons).
//
// Coordinate layout: an element at level n is a pair (a, b) of level n-1
// elements; coordinates [0, 2^(n-1)) belong to a and the rest to b, each
// half laid out recursively. Embedding x as (x, 0) is therefore a
// zero-padding of the coordinate vector.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sp16/rational.hpp"

namespace sp16 {

inline constexpr int kMaxLevel = 4;
inline constexpr std::size_t kNinerSupport = 9;

constexpr std::size_t dimension(int level) { return std::size_t{1} << level; }

class CDNumber {
 public:
  /// The real number 0 at level 0.
  CDNumber();

  /// Infers the level from the coordinate count, which must be 1, 2, 4, 8 or 16.
  explicit CDNumber(std::vector<Rational> coords);
  CDNumber(int level, std::vector<Rational> coords);

  static CDNumber zero(int level);
  static CDNumber one(int level);
  static CDNumber real(int level, const Rational& value);
  /// Basis unit e_index; e_0 is the unit.
  static CDNumber basis(int level, std::size_t index);
  /// The pair (a, b) one level above its halves.
  static CDNumber join(const CDNumber& a, const CDNumber& b);

  int level() const { return level_; }
  std::size_t dim() const { return coords_.size(); }
  std::span<const Rational> coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  /// Halves of the pair decomposition. Level must be > 0.
  CDNumber lower() const;
  CDNumber upper() const;

  bool is_zero() const;
  bool is_real() const;

  /// Canonical text: "L<level>[c0, c1, ...]" with each coordinate in lowest terms.
  std::string to_string() const;

  friend bool operator==(const CDNumber&, const CDNumber&) = default;

  std::size_t hash() const;

 private:
  int level_ = 0;
  std::vector<Rational> coords_;
};

/// Canonical total order: level first, then lexicographic on coordinates.
bool canonical_less(const CDNumber& x, const CDNumber& y);

struct CDNumberHash {
  std::size_t operator()(const CDNumber& x) const { return x.hash(); }
};

struct CanonicalLess {
  bool operator()(const CDNumber& x, const CDNumber& y) const { return canonical_less(x, y); }
};

CDNumber add(const CDNumber& x, const CDNumber& y);
CDNumber sub(const CDNumber& x, const CDNumber& y);
CDNumber negate(const CDNumber& x);
CDNumber scale(const Rational& s, const CDNumber& x);

/// Recursive conjugation: identity on reals, (a, b) -> (conj a, -b) above.
CDNumber conjugate(const CDNumber& x);

/// Sum of squared coordinates.
Rational norm_sq(const CDNumber& x);

/// The general Conway-Smith doubling product
///   (a,b)(c,d) = (ac - conj(b conj d),
///                 conj(conj b conj c) + conj(conj b conj(conj a conj(conj(b^-1) conj d))))
/// with (a,0)(c,d) = (ac, conj(a) d) when b = 0. Sub-products recurse through
/// this same function.
///
/// Levels 0..3 form a genuine (bilinear) algebra, so there the product is
/// evaluated through structure constants that are themselves generated by
/// running the verbatim recursion on basis pairs. Level 4 always runs the
/// verbatim formula on octonion halves.
CDNumber mul_conway_smith(const CDNumber& x, const CDNumber& y);

/// The verbatim recursion at every level, with no structure-constant
/// shortcut. Slow; kept as the reference the fast path is tested against.
CDNumber mul_conway_smith_reference(const CDNumber& x, const CDNumber& y);

/// Signed basis product e_i e_j = sign * e_index at levels 0..3.
struct BasisProduct {
  int sign;
  std::size_t index;
};
BasisProduct basis_product(int level, std::size_t i, std::size_t j);

/// The level-4 shortcut (a,b)(c,d) = (ac - d conj b, cb + (conj(a) b^-1)(bd)),
/// with the same b = 0 branch. Octonion halves use mul_conway_smith.
CDNumber mul_16on_simplified(const CDNumber& x, const CDNumber& y);

/// conj(x) / |x|^2. Throws ZeroElementError on zero.
CDNumber inverse(const CDNumber& x);

/// Level-4 element whose coordinates 9..15 vanish. Throws LevelError otherwise.
bool is_niner(const CDNumber& x);

enum class SignClass { AllPositive, AllNegative, Mixed, HasZeroCoord };

/// Classifies the full coordinate vector; any zero coordinate wins over Mixed.
SignClass sign_class(const CDNumber& x);

/// Classifies only the coordinates whose indices are listed in `support`.
SignClass sign_class_on(const CDNumber& x, std::span<const std::size_t> support);

/// Same privileged orthant: both AllPositive or both AllNegative.
bool same_privileged_orthant(const CDNumber& x, const CDNumber& y);

/// Pads with zero halves up to target_level.
CDNumber embed(const CDNumber& x, int target_level);

const char* to_string(SignClass c);

inline CDNumber operator+(const CDNumber& x, const CDNumber& y) { return add(x, y); }
inline CDNumber operator-(const CDNumber& x, const CDNumber& y) { return sub(x, y); }
inline CDNumber operator-(const CDNumber& x) { return negate(x); }
inline CDNumber operator*(const CDNumber& x, const CDNumber& y) { return mul_conway_smith(x, y); }

}  // namespace sp16
