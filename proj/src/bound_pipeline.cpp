#include "sp16/bound_pipeline.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sp16/errors.hpp"

namespace sp16 {

namespace {

Rational as_rational(std::uint64_t n) { return Rational(static_cast<std::int64_t>(n)); }

ChainStage make_stage(std::string name, Rational lhs, std::string relation, Rational rhs,
                      bool informational = false) {
  bool pass = false;
  if (relation == ">=") pass = lhs >= rhs;
  else if (relation == ">") pass = lhs > rhs;
  else if (relation == "<=") pass = lhs <= rhs;
  else if (relation == "<") pass = lhs < rhs;
  else if (relation == "==") pass = lhs == rhs;
  else throw std::invalid_argument("make_stage: unknown relation " + relation);
  return ChainStage{std::move(name), std::move(lhs), std::move(relation), std::move(rhs), pass, informational};
}

std::string orthant_failure_reason(const ElementSet& a) {
  const auto support = coordinate_support(a);
  const SignClass first = sign_class_on(a[0], support);
  for (const auto& x : a) {
    const SignClass c = sign_class_on(x, support);
    if (c != SignClass::AllPositive && c != SignClass::AllNegative) {
      return "element " + x.to_string() + " is " + to_string(c) + " on the set's coordinate support";
    }
    if (c != first) {
      return "elements lie in opposite privileged orthants (" + std::string(to_string(first)) + " and " +
             to_string(c) + ")";
    }
  }
  return "set does not lie in a single privileged orthant";
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::octonion ? "octonion" : "sixteen_on"; }
const char* to_string(CountBasis basis) { return basis == CountBasis::intro ? "intro" : "strict"; }

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "not_applicable";
  }
  return "?";
}

std::uint64_t ball_count_constant(Mode mode) { return mode == Mode::octonion ? 241 : 7333; }

unsigned ceil_log2(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("ceil_log2: n must be >= 1");
  return n == 1 ? 0U : static_cast<unsigned>(std::bit_width(n - 1));
}

Side default_side(Mode mode) { return mode == Mode::octonion ? Side::left : Side::right; }

DyadicBuckets select_R(const std::vector<RatioProfile>& profiles, Side requested) {
  if (profiles.empty()) throw std::invalid_argument("select_R: no profiles");

  DyadicBuckets out;
  const auto orient = [&](Side primary) {
    out.primary = primary;
    out.dominant_side_sum = 0;
    out.other_side_sum = 0;
    for (const auto& p : profiles) {
      const std::uint64_t mine = primary == Side::left ? p.ell : p.r;
      const std::uint64_t theirs = primary == Side::left ? p.r : p.ell;
      if (mine >= theirs) out.dominant_side_sum += mine * theirs;
      if (mine <= theirs) out.other_side_sum += mine * theirs;
    }
  };
  orient(requested);
  if (out.dominant_side_sum < out.other_side_sum) {
    orient(requested == Side::left ? Side::right : Side::left);
    out.swapped = true;
  }

  for (const auto& p : profiles) {
    const std::uint64_t mine = out.primary_count(p);
    const std::uint64_t theirs = out.primary == Side::left ? p.r : p.ell;
    if (mine < theirs || mine == 0) continue;
    const auto index = static_cast<unsigned>(std::bit_width(mine) - 1);
    out.buckets[index].push_back(p);
    out.weight[index] += mine * mine;
  }
  if (out.buckets.empty()) throw Error("select_R: no profile has primary count >= secondary count");

  std::uint64_t best = 0;
  for (const auto& [index, w] : out.weight) {
    if (w > best) {
      best = w;
      out.chosen_I = index;
    }
  }
  return out;
}

std::vector<std::pair<CDNumber, CDNumber>> phi_map(const std::vector<CDNumber>& R) {
  if (R.size() < 2) {
    throw DegenerateRError("phi_map: R has " + std::to_string(R.size()) +
                           " element(s); the nearest-neighbour map needs at least 2");
  }
  std::vector<std::pair<CDNumber, CDNumber>> out;
  out.reserve(R.size());
  for (const auto& x : R) {
    const CDNumber* best = nullptr;
    Rational best_dist;
    for (const auto& y : R) {
      if (y == x) continue;
      const Rational dist = norm_sq(x - y);
      if (best == nullptr || dist < best_dist || (dist == best_dist && canonical_less(y, *best))) {
        best = &y;
        best_dist = dist;
      }
    }
    if (best == nullptr) throw DegenerateRError("phi_map: R contains a single distinct element");
    out.emplace_back(x, *best);
  }
  return out;
}

QuotientTable::QuotientTable(const ElementSet& a) : set_(&a) {
  if (a.contains_zero()) throw ZeroElementError("QuotientTable: 0 is in the set");
  inverses_.reserve(a.size());
  for (const auto& x : a) inverses_.push_back(inverse(x));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      left_[a[i] * inverses_[j]].emplace_back(i, j);
      right_[inverses_[j] * a[i]].emplace_back(i, j);
    }
  }
}

const QuotientTable::Reps& QuotientTable::reps(const CDNumber& x, Side side) const {
  const auto& map = side == Side::left ? left_ : right_;
  const auto it = map.find(x);
  return it == map.end() ? empty_ : it->second;
}

bool SumPairLess::operator()(const SumPair& p, const SumPair& q) const {
  if (canonical_less(p.first, q.first)) return true;
  if (canonical_less(q.first, p.first)) return false;
  return canonical_less(p.second, q.second);
}

std::optional<std::array<CDNumber, 4>> recover_quadruple(const CDNumber& p, const CDNumber& q,
                                                         const CDNumber& x, const CDNumber& y, Side side) {
  const CDNumber diff = y - x;
  if (diff.is_zero()) return std::nullopt;
  const CDNumber d = inverse(diff) * (p - x * q);
  const CDNumber b = q - d;
  if (side == Side::left) return std::array<CDNumber, 4>{x * b, b, y * d, d};
  return std::array<CDNumber, 4>{b * x, b, d * y, d};
}

SxSet build_Sx(const QuotientTable& table, const CDNumber& x, const CDNumber& phi_x, Side side) {
  if (x == phi_x) throw std::invalid_argument("build_Sx: x and phi(x) must differ");
  const ElementSet& a = table.set();
  const auto& reps_x = table.reps(x, side);
  const auto& reps_phi = table.reps(phi_x, side);

  SxSet sx{x, phi_x, side, {}, {}, reps_x.size(), reps_phi.size(), 0};
  std::vector<SumPair> all;
  all.reserve(reps_x.size() * reps_phi.size());
  for (const auto& [ia, ib] : reps_x) {
    for (const auto& [ic, id] : reps_phi) {
      SumPair pq{a[ia] + a[ic], a[ib] + a[id]};
      const auto solved = recover_quadruple(pq.first, pq.second, x, phi_x, side);
      if (solved && (*solved)[0] == a[ia] && (*solved)[1] == a[ib] && (*solved)[2] == a[ic] &&
          (*solved)[3] == a[id]) {
        ++sx.solver_recovered;
      }
      sx.quadruples.push_back(Quadruple{ia, ib, ic, id});
      all.push_back(std::move(pq));
    }
  }
  std::sort(all.begin(), all.end(), SumPairLess{});
  all.erase(std::unique(all.begin(), all.end()), all.end());
  sx.pairs = std::move(all);
  return sx;
}

SxSet build_Sx(const ElementSet& a, const CDNumber& x, const CDNumber& phi_x, Side side) {
  const QuotientTable table(a);
  return build_Sx(table, x, phi_x, side);
}

BallLemmaResult verify_ball_lemma(const ElementSet& a, const SxSet& sx) {
  BallLemmaResult out;
  if (!lies_in_single_privileged_orthant(a)) return out;
  const Rational radius_sq = norm_sq(sx.phi_x - sx.x);
  for (const auto& quad : sx.quadruples) {
    const CDNumber p = a[quad.a] + a[quad.c];
    const CDNumber q = a[quad.b] + a[quad.d];
    const CDNumber centre_offset =
        (sx.side == Side::right ? inverse(q) * p : p * inverse(q)) - sx.x;
    ++out.checked;
    if (norm_sq(centre_offset) > radius_sq) ++out.failures;
  }
  out.status = out.failures == 0 ? CheckStatus::pass : CheckStatus::fail;
  return out;
}

BoundReport evaluate_bound(const ElementSet& a, const EvalOptions& options) {
  if (a.empty()) throw ValidationError("evaluate_bound: empty set");
  if (a.contains_zero()) throw ZeroElementError("evaluate_bound: 0 is in the set");
  if (options.mode == Mode::octonion && a.level() > 3) {
    throw ValidationError("evaluate_bound: octonion mode needs elements at level <= 3");
  }
  if (options.mode == Mode::sixteen_on && !is_all_niner(a)) {
    throw ValidationError("evaluate_bound: sixteen_on mode needs a set of niners (flag all_niner)");
  }

  BoundReport report;
  report.mode = options.mode;
  report.side = options.side.value_or(default_side(options.mode));
  report.basis = options.basis;
  report.set_size = a.size();
  report.certified = lies_in_single_privileged_orthant(a);
  if (!report.certified) {
    report.uncertified_reason = orthant_failure_reason(a);
    if (!options.allow_uncertified) return report;
  }

  report.sumset_size = sumset(a).size();
  report.productset_size = productset(a).size();
  report.E = energy(a);
  const auto profiles = ratio_profiles(a);
  report.E_prime = energy_prime_from_profiles(profiles);

  const Side requested = options.basis == CountBasis::intro ? Side::left : report.side;
  const DyadicBuckets buckets = select_R(profiles, requested);
  report.primary = buckets.primary;
  report.swapped = buckets.swapped;
  report.chosen_I = buckets.chosen_I;
  const auto& R = buckets.R();
  report.R_size = R.size();

  std::vector<CDNumber> r_elements;
  for (const auto& p : R) r_elements.push_back(p.x);
  const auto phi = phi_map(r_elements);

  const QuotientTable table(a);
  std::vector<SumPair> union_pairs;
  std::uint64_t product_formula = 0;
  BallLemmaResult ball;
  ball.status = report.certified ? CheckStatus::pass : CheckStatus::not_applicable;
  for (const auto& [x, phi_x] : phi) {
    SxSet sx = build_Sx(table, x, phi_x, report.side);
    report.sum_Sx += sx.pairs.size();
    product_formula += sx.reps_x * sx.reps_phi;
    report.sx.push_back(
        SxSummary{x, phi_x, sx.reps_x, sx.reps_phi, sx.pairs.size(), sx.injective(), sx.solver_recovered});
    if (report.certified) {
      const BallLemmaResult r = verify_ball_lemma(a, sx);
      ball.checked += r.checked;
      ball.failures += r.failures;
      if (r.status == CheckStatus::fail) ball.status = CheckStatus::fail;
    }
    union_pairs.insert(union_pairs.end(), std::make_move_iterator(sx.pairs.begin()),
                       std::make_move_iterator(sx.pairs.end()));
  }
  std::sort(union_pairs.begin(), union_pairs.end(), SumPairLess{});
  union_pairs.erase(std::unique(union_pairs.begin(), union_pairs.end()), union_pairs.end());
  report.union_Sx = union_pairs.size();
  report.ball_lemma = ball;

  report.ratio = as_rational(report.sum_Sx) / as_rational(report.union_Sx);
  report.k16_lower = report.ratio - Rational(1);

  // Chain audit. C is the ball-count constant; log is ceil(log2 |A|).
  const Rational C = as_rational(ball_count_constant(options.mode));
  const Rational log_a = as_rational(ceil_log2(a.size()));
  const Rational e_prime = as_rational(report.E_prime);
  std::uint64_t sum_r_sq = 0;
  for (const auto& p : R) sum_r_sq += buckets.primary_count(p) * buckets.primary_count(p);
  const Rational dyadic = as_rational(report.R_size) * pow(Rational(2), 2 * report.chosen_I);
  auto& st = report.stages;

  st.push_back(make_stage("orientation: E' <= 2 sum_{primary>=secondary} primary*secondary", e_prime, "<=",
                          Rational(2) * as_rational(buckets.dominant_side_sum)));
  st.push_back(make_stage("pigeonhole: E'/(2 ceil log|A|) <= sum_R primary^2",
                          e_prime / (Rational(2) * log_a), "<=", as_rational(sum_r_sq)));
  st.push_back(make_stage("pigeonhole: sum_R primary^2 < |R| 2^(2I+2)", as_rational(sum_r_sq), "<",
                          dyadic * Rational(4)));
  st.push_back(make_stage("S_x sizes: sum |S_x| == sum reps(x) reps(phi(x))", as_rational(report.sum_Sx), "==",
                          as_rational(product_formula)));
  st.push_back(make_stage("chain: |A+A|^2 >= |union S_x|", pow(as_rational(report.sumset_size), 2), ">=",
                          as_rational(report.union_Sx)));
  st.push_back(make_stage("chain: |union S_x| >= sum |S_x| / C", as_rational(report.union_Sx), ">=",
                          as_rational(report.sum_Sx) / C));
  st.push_back(make_stage("chain: sum |S_x| / C >= |R| 2^(2I) / C", as_rational(report.sum_Sx) / C, ">=",
                          dyadic / C));
  st.push_back(make_stage("chain: |R| 2^(2I) / C >= E' / (8 C ceil log|A|)", dyadic / C, ">=",
                          e_prime / (Rational(8) * C * log_a)));
  st.push_back(make_stage("chain (E variant): |R| 2^(2I) / C >= E / (8 C ceil log|A|)", dyadic / C, ">=",
                          as_rational(report.E) / (Rational(8) * C * log_a), true));

  report.chain_ok = std::all_of(st.begin(), st.end(), [](const ChainStage& s) { return s.pass || s.informational; });
  report.computed = true;
  report.sanity_violation = options.mode == Mode::sixteen_on && report.certified &&
                            report.k16_lower > as_rational(kSixteenKissingUpper);
  return report;
}

SumProductCheck octonion_sum_product_check(const ElementSet& a) {
  SumProductCheck out;
  if (a.size() < 2 || a.contains_zero()) return out;
  out.applicable = is_inverse_closed(a) && hypothesis_check(ratio_profiles(a)).holds;
  out.max_size = std::max(sumset(a).size(), productset(a).size());
  out.lhs_cubed = pow(as_rational(out.max_size), 3) * Rational(1928) * as_rational(ceil_log2(a.size()));
  out.rhs = pow(as_rational(a.size()), 4);
  out.holds = out.lhs_cubed >= out.rhs;
  return out;
}

}  // namespace sp16
