#include <map>

#include "doctest.h"
#include "sp16/errors.hpp"
#include "sp16/random.hpp"
#include "sp16/set_ops.hpp"

using namespace sp16;

namespace {

ElementSet reals(std::initializer_list<Rational> values) { return real_set(4, values); }

ElementSet random_nonzero_set(Rng& rng, int level, std::size_t size) {
  std::vector<CDNumber> elems;
  while (elems.size() < size) {
    CDNumber x = random_cd(rng, level, 3);
    if (!x.is_zero() && std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(x);
  }
  return ElementSet(level, elems);
}

// Straight quadruple loops, products recomputed every time.
std::uint64_t brute_energy(const ElementSet& a) {
  std::uint64_t n = 0;
  for (const auto& x : a)
    for (const auto& y : a)
      for (const auto& z : a)
        for (const auto& w : a) n += (z * x == w * y) ? 1 : 0;
  return n;
}

std::uint64_t brute_energy_prime(const ElementSet& a) {
  std::uint64_t n = 0;
  for (const auto& x : a)
    for (const auto& y : a)
      for (const auto& z : a)
        for (const auto& w : a) n += (x * inverse(y) == inverse(z) * w) ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("sumset and product set") {
  const ElementSet a = reals({Rational(1), Rational(2), Rational(4), Rational(8)});
  CHECK(sumset(a).size() == 10);
  CHECK(productset(a).size() == 7);
  CHECK(sumset(a).contains(CDNumber::real(4, Rational(16))));
  CHECK(inverse_set(a).contains(CDNumber::real(4, Rational(1, 8))));
  CHECK_THROWS_AS(inverse_set(reals({Rational(0), Rational(1)})), ZeroElementError);
}

TEST_CASE("energies of {1, 2}") {
  const ElementSet a = reals({Rational(1), Rational(2)});
  CHECK(energy(a) == 6);
  CHECK(energy_prime(a) == 6);
}

TEST_CASE("energy lower bound for {1, 1/2, 2}") {
  const ElementSet a = reals({Rational(1), Rational(1, 2), Rational(2)});
  CHECK(productset(a).size() == 5);
  const EnergyLowerBound b = lemma1_bound(a);
  CHECK(b.applicable);
  CHECK(b.inverse_closed);
  CHECK(b.lhs == 19);
  CHECK(b.simplified_rhs == Rational(81, 5));
  CHECK(b.rhs == Rational(81, 5));
  CHECK(b.satisfied);
  CHECK(b.simplified_satisfied);
}

TEST_CASE("quotient sets and counts of a geometric progression") {
  const ElementSet a = reals({Rational(1), Rational(2), Rational(4), Rational(8)});
  const QuotientSets q = quotient_sets(a);
  CHECK(q.left.size() == 7);
  CHECK(q.left == q.right);
  CHECK(q.ratioset == q.left);
  const auto profiles = ratio_profiles(a);
  std::map<std::string, std::uint64_t> ell;
  for (const auto& p : profiles) {
    CHECK(p.ell == p.r);
    ell[p.x.to_string()] = p.ell;
  }
  CHECK(ell.at(CDNumber::real(4, Rational(1)).to_string()) == 4);
  CHECK(ell.at(CDNumber::real(4, Rational(2)).to_string()) == 3);
  CHECK(ell.at(CDNumber::real(4, Rational(1, 8)).to_string()) == 1);
  CHECK(energy_prime_from_profiles(profiles) == 44);
  CHECK(energy(a) == 44);
}

TEST_CASE("energies agree with brute force") {
  Rng rng(41);
  for (int t = 0; t < 12; ++t) {
    const int level = 3 + t % 2;
    const ElementSet a = random_nonzero_set(rng, level, 3 + static_cast<std::size_t>(t % 3));
    CHECK(energy(a) == brute_energy(a));
    CHECK(energy_prime(a) == brute_energy_prime(a));
  }
}

TEST_CASE("E' by quadruples equals sum ell * r") {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const int level = 3 + t % 2;
    const ElementSet a = random_nonzero_set(rng, level, 3 + static_cast<std::size_t>(t % 6));
    CHECK(energy_prime(a) == energy_prime_from_profiles(ratio_profiles(a)));
  }
  const ElementSet inv_closed = reals({Rational(1, 3), Rational(3), Rational(1), Rational(9), Rational(1, 9)});
  CHECK(energy_prime(inv_closed) == energy_prime_from_profiles(ratio_profiles(inv_closed)));
}

TEST_CASE("left quotient counts sum to |A|^2") {
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const ElementSet a = random_nonzero_set(rng, 4, 4);
    std::uint64_t total = 0;
    for (const auto& [x, count] : left_quotient_counts(a)) total += count;
    CHECK(total == 16);
    total = 0;
    for (const auto& [x, count] : right_quotient_counts(a)) total += count;
    CHECK(total == 16);
  }
}

TEST_CASE("hypothesis check") {
  std::vector<RatioProfile> balanced{{CDNumber::one(4), 3, 3}, {CDNumber::real(4, Rational(2)), 2, 2}};
  const HypothesisCheck h = hypothesis_check(balanced);
  CHECK(h.holds);
  CHECK(h.sum_ell_r == 13);
  CHECK(h.sum_ell_sq == 13);

  std::vector<RatioProfile> skewed{{CDNumber::one(4), 4, 0}, {CDNumber::real(4, Rational(2)), 0, 4}};
  const HypothesisCheck s = hypothesis_check(skewed);
  CHECK_FALSE(s.holds);
  CHECK(s.sum_ell_r == 0);
}

TEST_CASE("quotient mass identity is reported, not assumed") {
  const QuotientMassReport even = quotient_mass_identity(reals({Rational(1), Rational(2)}));
  CHECK(even.sum_ell_on_ratioset == 4);
  CHECK(even.even_spread_value == Rational(4));
  CHECK(even.holds);

  const QuotientMassReport uneven = quotient_mass_identity(reals({Rational(1), Rational(2), Rational(4)}));
  CHECK(uneven.sum_ell_on_ratioset == 9);
  CHECK(uneven.even_spread_value == Rational(9));

  const QuotientMassReport geometric =
      quotient_mass_identity(reals({Rational(1), Rational(2), Rational(4), Rational(8)}));
  CHECK(geometric.sum_ell_on_ratioset == 16);
  CHECK(geometric.even_spread_value == Rational(16));

  Rng rng(53);
  const ElementSet generic = random_nonzero_set(rng, 4, 4);
  const QuotientMassReport skew = quotient_mass_identity(generic);
  CHECK(skew.sum_ell_on_ratioset == 4);
  CHECK_FALSE(skew.holds);
}

TEST_CASE("profiles of small sets") {
  const auto pair = ratio_profiles(reals({Rational(1), Rational(2)}));
  REQUIRE(pair.size() == 3);
  for (const auto& p : pair) {
    CHECK(p.ell == p.r);
    CHECK(p.ell == (p.x == CDNumber::one(4) ? 2U : 1U));
  }
  const CDNumber g = CDNumber::basis(4, 3) + CDNumber::basis(4, 10);
  const auto single = ratio_profiles(ElementSet{g});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == RatioProfile{CDNumber::one(4), 1, 1});
}

TEST_CASE("inverse-closed octonion and niner sets have counts symmetric under inversion") {
  Rng rng(67);
  for (int t = 0; t < 20; ++t) {
    const int level = 3 + t % 2;
    std::vector<CDNumber> elems;
    for (int i = 0; i < 3; ++i) {
      const CDNumber x = level == 4 ? random_niner(rng, 3) : random_cd(rng, 3, 3);
      if (x.is_zero()) continue;
      elems.push_back(x);
      elems.push_back(inverse(x));
    }
    const ElementSet a(level, elems);
    std::map<std::string, std::uint64_t> ell;
    for (const auto& [x, count] : left_quotient_counts(a)) ell[x.to_string()] = count;
    for (const auto& [x, count] : left_quotient_counts(a)) {
      const auto it = ell.find(inverse(x).to_string());
      REQUIRE(it != ell.end());
      CHECK(it->second == count);
    }
  }
}

TEST_CASE("the inverse of a quotient is not the swapped quotient for general 16-ons") {
  Rng rng(71);
  bool differs = false;
  for (int t = 0; t < 20 && !differs; ++t) {
    const CDNumber a = random_cd(rng, 4, 3);
    const CDNumber b = random_cd(rng, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    differs = inverse(a * inverse(b)) != b * inverse(a);
  }
  CHECK(differs);
}

TEST_CASE("small set constructions") {
  const ElementSet a = reals({Rational(1), Rational(2)});
  CHECK(sumset(a) == reals({Rational(2), Rational(3), Rational(4)}));
  CHECK(productset(a) == reals({Rational(1), Rational(2), Rational(4)}));
  CHECK(inverse_set(a) == reals({Rational(1), Rational(1, 2)}));
  const QuotientSets q = quotient_sets(a);
  const ElementSet expect = reals({Rational(1, 2), Rational(1), Rational(2)});
  CHECK(q.left == expect);
  CHECK(q.right == expect);
  CHECK(q.ratioset == expect);

  CHECK(productset(ElementSet{CDNumber::basis(3, 1)}) == ElementSet{-CDNumber::one(3)});

  for (std::size_t k = 2; k <= 7; ++k) {
    std::vector<CDNumber> progression;
    for (std::size_t i = 0; i < k; ++i) {
      progression.push_back(CDNumber::real(4, Rational(3 + 2 * static_cast<std::int64_t>(i))));
    }
    CHECK(sumset(ElementSet(4, progression)).size() == 2 * k - 1);
  }

  const ElementSet one = reals({Rational(1)});
  CHECK(energy(one) == 1);
  CHECK(energy_prime(one) == 1);
  const EnergyLowerBound b = lemma1_bound(one);
  CHECK(b.lhs == 1);
  CHECK(b.simplified_rhs == Rational(1));
  CHECK(b.simplified_satisfied);
}

TEST_CASE("generic size bounds") {
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const ElementSet a = random_nonzero_set(rng, 3 + t % 2, 3 + static_cast<std::size_t>(t % 4));
    const std::size_t n = a.size();
    CHECK(sumset(a).size() <= n * n);
    CHECK(productset(a).size() <= n * n);
    CHECK(energy(a) >= n * n);
    CHECK(energy_prime(a) >= n);
    CHECK(inverse_set(inverse_set(a)) == a);
    CHECK(quotient_sets(a).ratioset.contains(CDNumber::one(a.level())));
  }
  const ElementSet closed = reals({Rational(1, 3), Rational(3), Rational(1)});
  CHECK(inverse_set(closed) == closed);
}

TEST_CASE("hypothesis on small and commutative sets") {
  const HypothesisCheck pair = hypothesis_check(ratio_profiles(reals({Rational(1), Rational(2)})));
  CHECK(pair.holds);
  CHECK(pair.sum_ell_r == 6);
  CHECK(pair.sum_ell_sq == 6);
  CHECK(hypothesis_check(ratio_profiles(reals({Rational(1), Rational(3), Rational(5), Rational(7)}))).holds);
}

TEST_CASE("how often the energy hypothesis holds on random octonion sets") {
  Rng rng(79);
  int holds = 0;
  for (int t = 0; t < 100; ++t) {
    if (hypothesis_check(ratio_profiles(random_nonzero_set(rng, 3, 3 + static_cast<std::size_t>(t % 6))))
            .holds) {
      ++holds;
    }
  }
  MESSAGE("energy hypothesis held on " << holds << " of 100 random octonion sets");
  CHECK(holds >= 0);
}
