#pragma once

// Dyadic selection of R, the nearest-neighbour map phi, the sets S_x, the
// ball-membership check, and the k16 lower-bound functional
//   k16 >= sum_x |S_x| / |union_x S_x| - 1
// with an audit of every inequality in the chain that produces it.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sp16/element_set.hpp"
#include "sp16/set_ops.hpp"

namespace sp16 {

enum class Mode { octonion, sixteen_on };
const char* to_string(Mode mode);

/// Which representation count drives the dyadic selection of R.
///  intro:  left-quotient counts ell(x), whatever side S_x is built on.
///  strict: the count on the side S_x is built on (r(x) for Side::right).
enum class CountBasis { intro, strict };
const char* to_string(CountBasis basis);

/// 241 = k8 + 1 for octonions, 7333 = 7332 + 1 for 16-ons.
std::uint64_t ball_count_constant(Mode mode);
inline constexpr std::uint64_t kSixteenKissingUpper = 7332;

/// ceil(log2 n) for n >= 1.
unsigned ceil_log2(std::uint64_t n);

struct DyadicBuckets {
  std::map<unsigned, std::vector<RatioProfile>> buckets;
  std::map<unsigned, std::uint64_t> weight;  // sum of primary count squared per bucket
  unsigned chosen_I = 0;
  Side primary = Side::left;  // count used for bucketing (left = ell, right = r)
  bool swapped = false;       // orientation test failed for the requested count

  // sum_{primary >= secondary} primary * secondary, and the mirror sum
  std::uint64_t dominant_side_sum = 0;
  std::uint64_t other_side_sum = 0;

  const std::vector<RatioProfile>& R() const { return buckets.at(chosen_I); }
  std::uint64_t primary_count(const RatioProfile& p) const { return primary == Side::left ? p.ell : p.r; }
};

/// Buckets the profiles with primary >= secondary by floor(log2 primary) and
/// picks the heaviest bucket (smallest I on ties). `requested` names the
/// count to bucket by; it is swapped for the other one when
///   sum_{primary >= secondary} primary*secondary < sum_{primary <= secondary} primary*secondary.
DyadicBuckets select_R(const std::vector<RatioProfile>& profiles, Side requested = Side::left);

/// x -> phi(x): nearest other element of R by exact squared distance, ties
/// to the canonically smaller element. Output follows the order of R.
/// Throws DegenerateRError when |R| < 2.
std::vector<std::pair<CDNumber, CDNumber>> phi_map(const std::vector<CDNumber>& R);

/// Representatives of every left quotient a b^-1 and right quotient b^-1 a,
/// as index pairs (a, b) into the set.
class QuotientTable {
 public:
  using Reps = std::vector<std::pair<std::size_t, std::size_t>>;

  explicit QuotientTable(const ElementSet& a);

  const ElementSet& set() const { return *set_; }
  const CDNumber& inverse_of(std::size_t i) const { return inverses_[i]; }
  /// Pairs (a, b) with a b^-1 = x (left) or b^-1 a = x (right).
  const Reps& reps(const CDNumber& x, Side side) const;

 private:
  const ElementSet* set_;
  std::vector<CDNumber> inverses_;
  std::unordered_map<CDNumber, Reps, CDNumberHash> left_;
  std::unordered_map<CDNumber, Reps, CDNumberHash> right_;
  Reps empty_;
};

struct Quadruple {
  std::size_t a, b, c, d;  // indices into the set
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

using SumPair = std::pair<CDNumber, CDNumber>;

struct SumPairLess {
  bool operator()(const SumPair& p, const SumPair& q) const;
};

struct SxSet {
  CDNumber x;
  CDNumber phi_x;
  Side side = Side::left;
  std::vector<SumPair> pairs;          // distinct (a+c, b+d), canonical order
  std::vector<Quadruple> quadruples;   // every (a,b,c,d) behind the pairs
  std::uint64_t reps_x = 0;
  std::uint64_t reps_phi = 0;
  std::uint64_t solver_recovered = 0;  // quadruples reproduced by the closed-form solve

  /// Distinct quadruples never collide on the same (p, q).
  bool injective() const { return pairs.size() == quadruples.size(); }
};

/// Builds S_x from representatives of x and phi(x):
///   left:  a b^-1 = x, c d^-1 = phi(x)
///   right: b^-1 a = x, d^-1 c = phi(x)
/// Throws std::invalid_argument when x == phi_x.
SxSet build_Sx(const QuotientTable& table, const CDNumber& x, const CDNumber& phi_x, Side side);
SxSet build_Sx(const ElementSet& a, const CDNumber& x, const CDNumber& phi_x, Side side);

/// Closed-form recovery of (a, b, c, d) from p = a+c, q = b+d and the two
/// quotients: d = (y-x)^-1 (p - x q), b = q - d, then c, a from the side's
/// quotient relation. Returns nullopt when x == y.
std::optional<std::array<CDNumber, 4>> recover_quadruple(const CDNumber& p, const CDNumber& q,
                                                         const CDNumber& x, const CDNumber& y, Side side);

enum class CheckStatus { pass, fail, not_applicable };
const char* to_string(CheckStatus status);

struct BallLemmaResult {
  CheckStatus status = CheckStatus::not_applicable;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
};

/// For every quadruple behind S_x checks
///   right: |(b+d)^-1 (a+c) - x|^2 <= |phi(x) - x|^2
///   left:  |(a+c)(b+d)^-1 - x|^2 <= |phi(x) - x|^2
/// Refuses (not_applicable) unless the set sits in one privileged orthant.
BallLemmaResult verify_ball_lemma(const ElementSet& a, const SxSet& sx);

struct ChainStage {
  std::string name;
  Rational lhs;
  std::string relation;  // ">=", ">", "<=", "<", "=="
  Rational rhs;
  bool pass = false;
  bool informational = false;  // reported, excluded from the audit verdict
};

struct SxSummary {
  CDNumber x;
  CDNumber phi_x;
  std::uint64_t reps_x = 0;
  std::uint64_t reps_phi = 0;
  std::uint64_t size = 0;
  bool injective = false;
  std::uint64_t solver_recovered = 0;
};

struct EvalOptions {
  Mode mode = Mode::sixteen_on;
  std::optional<Side> side;  // default: left for octonion, right for sixteen_on
  CountBasis basis = CountBasis::intro;
  bool allow_uncertified = false;
};

Side default_side(Mode mode);

struct BoundReport {
  Mode mode = Mode::sixteen_on;
  Side side = Side::right;
  CountBasis basis = CountBasis::intro;

  bool certified = false;
  std::string uncertified_reason;
  bool computed = false;  // false when an uncertified set was refused

  std::uint64_t set_size = 0;
  std::uint64_t sumset_size = 0;
  std::uint64_t productset_size = 0;
  std::uint64_t E = 0;
  std::uint64_t E_prime = 0;

  Side primary = Side::left;
  bool swapped = false;
  unsigned chosen_I = 0;
  std::uint64_t R_size = 0;
  std::vector<SxSummary> sx;

  std::uint64_t sum_Sx = 0;
  std::uint64_t union_Sx = 0;
  Rational ratio;
  Rational k16_lower;

  std::vector<ChainStage> stages;
  bool chain_ok = false;
  BallLemmaResult ball_lemma;
  bool sanity_violation = false;  // k16_lower > 7332 on a certified 16-on report
};

/// Runs profiles -> select_R -> phi_map -> S_x -> union and audits the chain.
/// Throws ValidationError on an empty set or a set the mode cannot take,
/// ZeroElementError if 0 is present, DegenerateRError when |R| < 2.
BoundReport evaluate_bound(const ElementSet& a, const EvalOptions& options);

/// max(|A+A|, |AA|) >= |A|^(4/3) / (1928 ceil(log2|A|))^(1/3), compared
/// exactly after cubing both sides.
struct SumProductCheck {
  bool applicable = false;  // inverse-closed and the energy hypothesis holds
  std::uint64_t max_size = 0;
  Rational lhs_cubed;  // max^3 * 1928 * ceil(log2 |A|)
  Rational rhs;        // |A|^4
  bool holds = false;
};

SumProductCheck octonion_sum_product_check(const ElementSet& a);

}  // namespace sp16
