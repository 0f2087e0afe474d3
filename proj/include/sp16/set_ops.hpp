#pragma once

// Finite-set combinatorics over CDNumbers: sumsets, product sets, quotient
// sets, representation counts and multiplicative energies.
//
// Every construction ranges over ordered pairs, equal elements included.

#include <cstdint>
#include <utility>
#include <vector>

#include "sp16/element_set.hpp"

namespace sp16 {

ElementSet sumset(const ElementSet& a);
ElementSet productset(const ElementSet& a);
/// Throws ZeroElementError if 0 is in A.
ElementSet inverse_set(const ElementSet& a);

struct QuotientSets {
  ElementSet left;      // { a b^-1 }
  ElementSet right;     // { b^-1 a }
  ElementSet ratioset;  // left ∩ right
};

QuotientSets quotient_sets(const ElementSet& a);

/// x with its count of representations as a left quotient (ell) and right
/// quotient (r).
struct RatioProfile {
  CDNumber x;
  std::uint64_t ell = 0;
  std::uint64_t r = 0;

  friend bool operator==(const RatioProfile&, const RatioProfile&) = default;
};

using CountList = std::vector<std::pair<CDNumber, std::uint64_t>>;

/// Representation counts of every element of A A^-1 (resp. A^-1 A), in
/// canonical order of the quotient.
CountList left_quotient_counts(const ElementSet& a);
CountList right_quotient_counts(const ElementSet& a);

/// One profile per element of the ratioset, in canonical order.
std::vector<RatioProfile> ratio_profiles(const ElementSet& a);

/// |{(a,b,c,d) in A^4 : ca = db}| by quadruple enumeration.
std::uint64_t energy(const ElementSet& a);

/// |{(a,b,c,d) in A^4 : a b^-1 = c^-1 d}| by quadruple enumeration.
std::uint64_t energy_prime(const ElementSet& a);

/// Sum over profiles of ell * r.
std::uint64_t energy_prime_from_profiles(const std::vector<RatioProfile>& profiles);

enum class Side { left, right };
const char* to_string(Side side);

struct HypothesisCheck {
  bool holds = false;
  Side min_side = Side::left;  // side attaining min(sum ell^2, sum r^2); left on ties
  std::uint64_t sum_ell_r = 0;
  std::uint64_t sum_ell_sq = 0;
  std::uint64_t sum_r_sq = 0;
};

/// sum ell*r >= min(sum ell^2, sum r^2).
HypothesisCheck hypothesis_check(const std::vector<RatioProfile>& profiles);

struct EnergyLowerBound {
  bool applicable = false;  // hypothesis held
  std::uint64_t lhs = 0;    // E'(A)
  Rational rhs;             // |A|^4 |A/A| / min(|A A^-1|, |A^-1 A|)^2
  bool satisfied = false;
  bool inverse_closed = false;
  Rational simplified_rhs;  // |A|^4 / |AA|; meaningful when inverse_closed
  bool simplified_satisfied = false;
  HypothesisCheck hypothesis;
};

/// Evaluates E'(A) >= |A|^4 |A/A| / min(|AA^-1|, |A^-1A|)^2 and, for
/// inverse-closed A, E'(A) >= |A|^4 / |AA|. No inequality is claimed when
/// the hypothesis fails. Throws ZeroElementError if 0 is in A.
EnergyLowerBound lemma1_bound(const ElementSet& a);

/// Compares sum_{x in A/A} ell(x) against |A|^2 |A/A| / |A A^-1|. The two
/// agree only when left-quotient representations are spread evenly, which
/// is reported here rather than assumed.
struct QuotientMassReport {
  std::uint64_t sum_ell_on_ratioset = 0;
  Rational even_spread_value;
  bool holds = false;
};

QuotientMassReport quotient_mass_identity(const ElementSet& a);

}  // namespace sp16
