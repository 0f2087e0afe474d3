#include "sp16/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sp16/bound_pipeline.hpp"
#include "sp16/errors.hpp"
#include "sp16/set_ops.hpp"

namespace sp16 {

namespace {

constexpr std::int64_t kCoordBound = 5;

CDNumber real_at(int level, const Rational& s) { return CDNumber::real(level, s); }

CDNumber nonzero_cd(Rng& rng, int level, std::int64_t bound) {
  for (;;) {
    CDNumber x = random_cd(rng, level, bound);
    if (!x.is_zero()) return x;
  }
}

CDNumber nonzero_niner(Rng& rng, std::int64_t bound) {
  for (;;) {
    CDNumber x = random_niner(rng, bound);
    if (!x.is_zero()) return x;
  }
}

// (a, 0) at level 4 with a a random octonion.
CDNumber with_zero_upper(Rng& rng, std::int64_t bound) {
  return CDNumber::join(random_cd(rng, 3, bound), CDNumber::zero(3));
}

std::string show(const CDNumber& x) { return x.to_string(); }

}  // namespace

void LawTally::record(bool ok, const std::string& detail) {
  ++checked;
  if (!ok) {
    if (failures == 0) first_failure = detail;
    ++failures;
  }
}

bool SuiteReport::ok() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawTally& l) { return l.pass(); });
}

LawTally& SuiteReport::law(const std::string& name) {
  for (auto& l : laws) {
    if (l.name == name) return l;
  }
  LawTally fresh;
  fresh.name = name;
  laws.push_back(std::move(fresh));
  return laws.back();
}

const LawTally* SuiteReport::find(const std::string& name) const {
  for (const auto& l : laws) {
    if (l.name == name) return &l;
  }
  return nullptr;
}

SuiteReport verify_algebra(std::uint64_t trials, std::uint64_t seed) {
  SuiteReport rep{"algebra", {}};
  Rng rng(seed);
  const int L = kMaxLevel;
  const CDNumber one = CDNumber::one(L);
  const CDNumber zero = CDNumber::zero(L);

  // Fixed order so the report lists the laws in sequence.
  for (const char* name : {"1 unit", "2 zero", "3 additive group", "4 norm", "5 scalars", "6 weak linearity",
                           "7 left distributivity", "8 inverse", "9 left alternativity", "10 left cancellation"}) {
    rep.law(name);
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    const CDNumber x = nonzero_cd(rng, L, kCoordBound);
    const CDNumber y = random_cd(rng, L, kCoordBound);
    const CDNumber z = random_cd(rng, L, kCoordBound);
    const Rational s = random_rational(rng, kCoordBound);
    const CDNumber S = real_at(L, s);
    const std::string ctx = "x=" + show(x) + " y=" + show(y);

    rep.law("1 unit").record(one * x == x && x * one == x, ctx);

    rep.law("2 zero").record(zero + x == x && x + zero == x && zero * x == zero && x * zero == zero, ctx);

    rep.law("3 additive group")
        .record(x + y == y + x && (x + y) + z == x + (y + z) && x + (-x) == zero && x - x == zero, ctx);

    const CDNumber xy = x * y;
    const Rational nx = norm_sq(x);
    rep.law("4 norm").record(x * conjugate(x) == real_at(L, nx) && conjugate(x) * x == real_at(L, nx) &&
                                 nx * norm_sq(y) == norm_sq(xy),
                             ctx);

    const CDNumber sxy = scale(s, xy);
    rep.law("5 scalars").record(sxy == (S * x) * y && sxy == (x * S) * y && sxy == x * (S * y) &&
                                    sxy == x * (y * S),
                                ctx + " s=" + s.to_string());

    rep.law("6 weak linearity")
        .record((x + S) * y == xy + S * y && x * (y + S) == xy + x * S, ctx + " s=" + s.to_string());

    rep.law("7 left distributivity").record(x * (y + z) == xy + x * z, ctx + " z=" + show(z));

    const CDNumber xi = inverse(x);
    rep.law("8 inverse").record(
        x * xi == one && xi * x == one && xi == scale(Rational(1) / nx, conjugate(x)) &&
            conjugate(xi) == inverse(conjugate(x)),
        ctx);

    rep.law("9 left alternativity").record(x * xy == (x * x) * y, ctx);

    rep.law("10 left cancellation").record(x * (xi * y) == y, ctx);
  }

  const std::uint64_t pair_trials = trials;
  for (int level = 0; level <= 3; ++level) {
    auto& law = rep.law("norm multiplicative at level " + std::to_string(level));
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = random_cd(rng, level, kCoordBound);
      const CDNumber y = random_cd(rng, level, kCoordBound);
      const CDNumber xy = x * y;
      // no zero divisors follows from multiplicativity; checked directly too
      law.record(norm_sq(x) * norm_sq(y) == norm_sq(xy) && (!xy.is_zero() || x.is_zero() || y.is_zero()),
                 "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    auto& law = rep.law("simplified 16-on product == general product");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = (t % 4 == 0) ? with_zero_upper(rng, kCoordBound) : random_cd(rng, L, kCoordBound);
      const CDNumber y = random_cd(rng, L, kCoordBound);
      law.record(mul_16on_simplified(x, y) == mul_conway_smith(x, y), "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    // the reference recursion is slow at level 4; a smaller sample suffices
    auto& law = rep.law("table product == verbatim recursion");
    const std::uint64_t n = std::max<std::uint64_t>(1, std::min<std::uint64_t>(trials, 200));
    for (std::uint64_t t = 0; t < n; ++t) {
      const int level = static_cast<int>(t % 5);
      const CDNumber x = (t % 7 == 0) ? embed(random_cd(rng, std::max(0, level - 1), kCoordBound), level)
                                      : random_cd(rng, level, kCoordBound);
      const CDNumber y = random_cd(rng, level, kCoordBound);
      law.record(mul_conway_smith(x, y) == mul_conway_smith_reference(x, y), "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    auto& law = rep.law("octonion identities (yx)x^-1 = y = x^-1(xy)");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = nonzero_cd(rng, 3, kCoordBound);
      const CDNumber y = random_cd(rng, 3, kCoordBound);
      const CDNumber xi = inverse(x);
      law.record((y * x) * xi == y && xi * (x * y) == y, "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    auto& law = rep.law("x^-1(xy) = y at level 4");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = nonzero_cd(rng, L, kCoordBound);
      const CDNumber y = random_cd(rng, L, kCoordBound);
      law.record(inverse(x) * (x * y) == y, "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    auto& law = rep.law("embedding of octonions is multiplicative");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = random_cd(rng, 3, kCoordBound);
      const CDNumber y = random_cd(rng, 3, kCoordBound);
      law.record(embed(x, L) * embed(y, L) == embed(x * y, L), "x=" + show(x) + " y=" + show(y));
    }
  }

  {
    auto& law = rep.law("niners closed under inversion");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber x = nonzero_niner(rng, kCoordBound);
      law.record(is_niner(inverse(x)), "x=" + show(x));
    }
  }

  {
    auto& law = rep.law("niner right distributivity (y+z)x = yx + zx");
    for (std::uint64_t t = 0; t < pair_trials; ++t) {
      const CDNumber y = random_cd(rng, L, kCoordBound);
      const CDNumber z = random_cd(rng, L, kCoordBound);
      const CDNumber x = random_niner(rng, kCoordBound);
      law.record((y + z) * x == y * x + z * x, "y=" + show(y) + " z=" + show(z) + " x=" + show(x));
    }
  }

  {
    auto& law = rep.law("right distributivity fails for some non-niner x");
    law.expect_counterexample = true;
    const std::uint64_t n = std::max<std::uint64_t>(1, std::min<std::uint64_t>(trials, 100));
    for (std::uint64_t t = 0; t < n; ++t) {
      const CDNumber y = random_cd(rng, L, kCoordBound);
      const CDNumber z = random_cd(rng, L, kCoordBound);
      const CDNumber x = random_cd(rng, L, kCoordBound);
      if (is_niner(x)) continue;
      law.record((y + z) * x == y * x + z * x, "y=" + show(y) + " z=" + show(z) + " x=" + show(x));
    }
  }
  return rep;
}

ElementSet random_set(Rng& rng, int level, std::size_t size, std::int64_t bound) {
  std::vector<CDNumber> elems;
  while (elems.size() < size) {
    CDNumber x = random_cd(rng, level, bound);
    if (x.is_zero() || std::find(elems.begin(), elems.end(), x) != elems.end()) continue;
    elems.push_back(std::move(x));
  }
  return ElementSet(level, std::move(elems));
}

ElementSet random_inverse_closed_set(Rng& rng, int level, std::size_t generators, std::int64_t bound) {
  std::vector<CDNumber> elems;
  while (elems.size() < 2 * generators) {
    CDNumber x = level == kMaxLevel ? random_niner(rng, bound) : random_cd(rng, level, bound);
    if (x.is_zero()) continue;
    CDNumber xi = inverse(x);
    if (std::find(elems.begin(), elems.end(), x) != elems.end() || x == xi) continue;
    elems.push_back(std::move(x));
    elems.push_back(std::move(xi));
  }
  return ElementSet(level, std::move(elems));
}

ElementSet random_geometric_niner_set(Rng& rng, std::size_t k) {
  for (;;) {
    const Rational m(rng.uniform(2, 5));
    CDNumber g = CDNumber::real(kMaxLevel, m);
    if (rng.coin()) {
      const auto axis = static_cast<std::size_t>(rng.uniform(1, 8));
      g = g + scale(Rational(1, rng.uniform(1, 4)), CDNumber::basis(kMaxLevel, axis));
    }
    std::vector<CDNumber> powers{g};
    while (powers.size() < k) powers.push_back(g * powers.back());
    ElementSet out(kMaxLevel, std::move(powers));
    if (out.size() == k && lies_in_single_privileged_orthant(out)) return out;
  }
}

SuiteReport verify_setops(std::uint64_t trials, std::uint64_t seed) {
  SuiteReport rep{"setops", {}};
  Rng rng(seed);
  auto& two_path = rep.law("E' quadruple count == sum ell*r");
  auto& mass = rep.law("sum over AA^-1 of ell == |A|^2");
  auto& energy_bound = rep.law("inverse-closed niner sets: E' >= |A|^4/|AA| when the hypothesis holds");
  auto& octo_bound = rep.law("octonion sum-product inequality when the hypothesis holds");

  for (std::uint64_t t = 0; t < trials; ++t) {
    const int level = (t % 2 == 0) ? 3 : 4;
    const auto size = static_cast<std::size_t>(rng.uniform(3, 8));
    const ElementSet a = random_set(rng, level, size, 3);
    const auto profiles = ratio_profiles(a);
    two_path.record(energy_prime(a) == energy_prime_from_profiles(profiles), "level " + std::to_string(level));

    std::uint64_t sum_ell = 0;
    for (const auto& [x, count] : left_quotient_counts(a)) sum_ell += count;
    mass.record(sum_ell == a.size() * a.size());
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    const ElementSet a = random_inverse_closed_set(rng, kMaxLevel, static_cast<std::size_t>(rng.uniform(2, 4)), 3);
    const EnergyLowerBound b = lemma1_bound(a);
    if (!b.applicable) continue;
    energy_bound.record(b.inverse_closed && b.satisfied && b.simplified_satisfied,
                        "E'=" + std::to_string(b.lhs) + " rhs=" + b.simplified_rhs.to_string());
  }

  for (std::uint64_t t = 0; t < trials; ++t) {
    const ElementSet a = random_inverse_closed_set(rng, 3, static_cast<std::size_t>(rng.uniform(2, 6)), 3);
    const SumProductCheck c = octonion_sum_product_check(a);
    if (!c.applicable) continue;
    octo_bound.record(c.holds, "|A|=" + std::to_string(a.size()));
  }
  return rep;
}

SuiteReport verify_pipeline(std::uint64_t trials, std::uint64_t seed) {
  SuiteReport rep{"pipeline", {}};
  Rng rng(seed);
  auto& chain = rep.law("chain audit on certified sets");
  auto& ball = rep.law("ball lemma on certified sets");
  auto& sanity = rep.law("k16_lower <= 7332");
  auto& injective = rep.law("quadruples behind S_x are unique");

  for (std::uint64_t t = 0; t < trials; ++t) {
    const ElementSet a = random_geometric_niner_set(rng, static_cast<std::size_t>(rng.uniform(3, 8)));
    EvalOptions options;
    options.mode = Mode::sixteen_on;
    BoundReport r;
    try {
      r = evaluate_bound(a, options);
    } catch (const DegenerateRError&) {
      continue;
    }
    std::string failed;
    for (const auto& s : r.stages) {
      if (!s.pass && !s.informational) failed += s.name + "; ";
    }
    chain.record(r.chain_ok, failed);
    ball.record(r.ball_lemma.status == CheckStatus::pass, std::to_string(r.ball_lemma.failures) + " failures");
    sanity.record(!r.sanity_violation, r.k16_lower.to_string());
    bool all_injective = true;
    for (const auto& s : r.sx) all_injective = all_injective && s.injective;
    injective.record(all_injective);
  }
  return rep;
}

std::string render_suite(const SuiteReport& report) {
  std::ostringstream out;
  out << "suite " << report.suite << '\n';
  for (const auto& l : report.laws) {
    out << (l.pass() ? "  PASS " : "  FAIL ") << l.name << ": ";
    if (l.expect_counterexample) {
      out << l.failures << " counterexamples in " << l.checked << " trials";
    } else {
      out << (l.checked - l.failures) << "/" << l.checked << " passed";
    }
    if (!l.pass() && !l.first_failure.empty() && !l.expect_counterexample) {
      out << " (first failure: " << l.first_failure << ")";
    }
    if (l.pass() && l.expect_counterexample && !l.first_failure.empty()) {
      out << " (first: " << l.first_failure << ")";
    }
    out << '\n';
  }
  out << "suite " << report.suite << (report.ok() ? " ok" : " FAILED") << '\n';
  return out.str();
}

}  // namespace sp16
