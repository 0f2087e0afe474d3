#include "sp16/set_ops.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sp16/errors.hpp"

namespace sp16 {

namespace {

void require_nonzero(const ElementSet& a, const char* op) {
  if (a.contains_zero()) throw ZeroElementError(std::string(op) + ": 0 is in the set");
}

// Assigns dense ids to distinct CDNumbers.
class Interner {
 public:
  std::size_t id(const CDNumber& x) {
    auto [it, inserted] = ids_.try_emplace(x, ids_.size());
    return it->second;
  }

 private:
  std::unordered_map<CDNumber, std::size_t, CDNumberHash> ids_;
};

std::vector<CDNumber> inverses(const ElementSet& a) {
  std::vector<CDNumber> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(inverse(x));
  return out;
}

CountList count_sorted(std::unordered_map<CDNumber, std::uint64_t, CDNumberHash> counts) {
  CountList out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return canonical_less(p.first, q.first); });
  return out;
}

std::vector<CDNumber> keys(const CountList& counts) {
  std::vector<CDNumber> out;
  out.reserve(counts.size());
  for (const auto& [x, n] : counts) out.push_back(x);
  return out;
}

}  // namespace

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

ElementSet sumset(const ElementSet& a) {
  std::vector<CDNumber> out;
  out.reserve(a.size() * a.size());
  for (const auto& x : a) {
    for (const auto& y : a) out.push_back(x + y);
  }
  return ElementSet(a.level(), std::move(out));
}

ElementSet productset(const ElementSet& a) {
  std::vector<CDNumber> out;
  out.reserve(a.size() * a.size());
  for (const auto& x : a) {
    for (const auto& y : a) out.push_back(x * y);
  }
  return ElementSet(a.level(), std::move(out));
}

ElementSet inverse_set(const ElementSet& a) {
  require_nonzero(a, "inverse_set");
  return ElementSet(a.level(), inverses(a));
}

CountList left_quotient_counts(const ElementSet& a) {
  require_nonzero(a, "left_quotient_counts");
  const auto inv = inverses(a);
  std::unordered_map<CDNumber, std::uint64_t, CDNumberHash> counts;
  for (const auto& x : a) {
    for (const auto& yi : inv) ++counts[x * yi];
  }
  return count_sorted(std::move(counts));
}

CountList right_quotient_counts(const ElementSet& a) {
  require_nonzero(a, "right_quotient_counts");
  const auto inv = inverses(a);
  std::unordered_map<CDNumber, std::uint64_t, CDNumberHash> counts;
  for (const auto& x : a) {
    for (const auto& yi : inv) ++counts[yi * x];
  }
  return count_sorted(std::move(counts));
}

QuotientSets quotient_sets(const ElementSet& a) {
  require_nonzero(a, "quotient_sets");
  ElementSet left(a.level(), keys(left_quotient_counts(a)));
  ElementSet right(a.level(), keys(right_quotient_counts(a)));
  std::vector<CDNumber> both;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both),
                        CanonicalLess{});
  ElementSet ratio(a.level(), std::move(both));
  return QuotientSets{std::move(left), std::move(right), std::move(ratio)};
}

std::vector<RatioProfile> ratio_profiles(const ElementSet& a) {
  require_nonzero(a, "ratio_profiles");
  const CountList left = left_quotient_counts(a);
  const CountList right = right_quotient_counts(a);
  std::vector<RatioProfile> out;
  auto l = left.begin();
  auto r = right.begin();
  while (l != left.end() && r != right.end()) {
    if (canonical_less(l->first, r->first)) {
      ++l;
    } else if (canonical_less(r->first, l->first)) {
      ++r;
    } else {
      out.push_back(RatioProfile{l->first, l->second, r->second});
      ++l;
      ++r;
    }
  }
  return out;
}

std::uint64_t energy(const ElementSet& a) {
  const std::size_t n = a.size();
  Interner interner;
  // product_id[c * n + x] identifies the value a_c a_x
  std::vector<std::size_t> product_id(n * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t x = 0; x < n; ++x) product_id[c * n + x] = interner.id(a[c] * a[x]);
  }
  std::uint64_t count = 0;
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      for (std::size_t ic = 0; ic < n; ++ic) {
        for (std::size_t id = 0; id < n; ++id) {
          if (product_id[ic * n + ia] == product_id[id * n + ib]) ++count;
        }
      }
    }
  }
  return count;
}

std::uint64_t energy_prime(const ElementSet& a) {
  require_nonzero(a, "energy_prime");
  const std::size_t n = a.size();
  const auto inv = inverses(a);
  Interner interner;
  std::vector<std::size_t> left_id(n * n);   // a_i a_j^-1
  std::vector<std::size_t> right_id(n * n);  // a_i^-1 a_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      left_id[i * n + j] = interner.id(a[i] * inv[j]);
      right_id[i * n + j] = interner.id(inv[i] * a[j]);
    }
  }
  std::uint64_t count = 0;
  for (std::size_t ia = 0; ia < n; ++ia) {
    for (std::size_t ib = 0; ib < n; ++ib) {
      for (std::size_t ic = 0; ic < n; ++ic) {
        for (std::size_t id = 0; id < n; ++id) {
          if (left_id[ia * n + ib] == right_id[ic * n + id]) ++count;
        }
      }
    }
  }
  return count;
}

std::uint64_t energy_prime_from_profiles(const std::vector<RatioProfile>& profiles) {
  std::uint64_t sum = 0;
  for (const auto& p : profiles) sum += p.ell * p.r;
  return sum;
}

HypothesisCheck hypothesis_check(const std::vector<RatioProfile>& profiles) {
  HypothesisCheck h;
  for (const auto& p : profiles) {
    h.sum_ell_r += p.ell * p.r;
    h.sum_ell_sq += p.ell * p.ell;
    h.sum_r_sq += p.r * p.r;
  }
  h.min_side = h.sum_r_sq < h.sum_ell_sq ? Side::right : Side::left;
  h.holds = h.sum_ell_r >= std::min(h.sum_ell_sq, h.sum_r_sq);
  return h;
}

EnergyLowerBound lemma1_bound(const ElementSet& a) {
  require_nonzero(a, "lemma1_bound");
  EnergyLowerBound out;
  const auto profiles = ratio_profiles(a);
  out.hypothesis = hypothesis_check(profiles);
  out.applicable = out.hypothesis.holds;
  out.lhs = energy_prime(a);
  out.inverse_closed = is_inverse_closed(a);

  const QuotientSets q = quotient_sets(a);
  const Rational n4 = pow(Rational(static_cast<std::int64_t>(a.size())), 4);
  const auto min_quot = static_cast<std::int64_t>(std::min(q.left.size(), q.right.size()));
  out.rhs = n4 * Rational(static_cast<std::int64_t>(q.ratioset.size())) / pow(Rational(min_quot), 2);
  out.simplified_rhs = n4 / Rational(static_cast<std::int64_t>(productset(a).size()));
  if (out.applicable) {
    const Rational lhs(static_cast<std::int64_t>(out.lhs));
    out.satisfied = lhs >= out.rhs;
    out.simplified_satisfied = out.inverse_closed && lhs >= out.simplified_rhs;
  }
  return out;
}

QuotientMassReport quotient_mass_identity(const ElementSet& a) {
  require_nonzero(a, "quotient_mass_identity");
  QuotientMassReport out;
  const auto profiles = ratio_profiles(a);
  for (const auto& p : profiles) out.sum_ell_on_ratioset += p.ell;
  const auto left_size = static_cast<std::int64_t>(left_quotient_counts(a).size());
  const auto n = static_cast<std::int64_t>(a.size());
  out.even_spread_value = Rational(n * n * static_cast<std::int64_t>(profiles.size()), left_size);
  out.holds = Rational(static_cast<std::int64_t>(out.sum_ell_on_ratioset)) == out.even_spread_value;
  return out;
}

}  // namespace sp16
