#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sp16/cdnumber.hpp"
#include "sp16/errors.hpp"
#include "sp16/random.hpp"

using namespace sp16;

namespace {

CDNumber all_ones(int level, std::int64_t v) {
  return CDNumber(level, std::vector<Rational>(dimension(level), Rational(v)));
}

CDNumber from_ints(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> coords;
  for (auto v : values) coords.emplace_back(v);
  return CDNumber(std::move(coords));
}

// Element lines of a set file, in file order.
std::vector<CDNumber> element_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::vector<CDNumber> out;
  for (std::string line; std::getline(in, line);) {
    std::istringstream words(line);
    std::string key;
    words >> key;
    if (key != "element") continue;
    std::vector<Rational> coords;
    for (std::string w; words >> w;) coords.push_back(Rational::parse(w));
    out.emplace_back(std::move(coords));
  }
  return out;
}

}  // namespace

TEST_CASE("addition") {
  Rng rng(3);
  const CDNumber x = random_cd(rng, 4, 5);
  CHECK(x + CDNumber::zero(4) == x);
  CHECK(x + (-x) == CDNumber::zero(4));
  CHECK(all_ones(4, 1) + all_ones(4, 1) == all_ones(4, 2));
  CHECK_THROWS_AS(add(CDNumber::one(3), CDNumber::one(4)), LevelError);
}

TEST_CASE("construction checks the coordinate count") {
  CHECK_THROWS_AS(CDNumber(3, std::vector<Rational>(7)), LevelError);
  CHECK_THROWS_AS(CDNumber(std::vector<Rational>(3)), LevelError);
  CHECK_THROWS_AS(CDNumber::zero(5), LevelError);
  CHECK(CDNumber(std::vector<Rational>(16)).level() == 4);
}

TEST_CASE("conjugation") {
  CHECK(conjugate(CDNumber::one(4)) == CDNumber::one(4));
  for (std::size_t i = 1; i < 16; ++i) {
    CHECK(conjugate(CDNumber::basis(4, i)) == -CDNumber::basis(4, i));
  }
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const CDNumber x = random_cd(rng, 4, 5);
    CHECK(conjugate(conjugate(x)) == x);
  }
}

TEST_CASE("norm") {
  CHECK(norm_sq(CDNumber::zero(4)) == Rational(0));
  for (std::size_t i = 0; i < 16; ++i) CHECK(norm_sq(CDNumber::basis(4, i)) == Rational(1));
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    const CDNumber x = random_cd(rng, 4, 5);
    const CDNumber y = random_cd(rng, 4, 5);
    CHECK(x * conjugate(x) == CDNumber::real(4, norm_sq(x)));
    CHECK(norm_sq(x) * norm_sq(y) == norm_sq(x * y));
  }
}

TEST_CASE("unit, inverse and the b = 0 branch") {
  Rng rng(11);
  const CDNumber one = CDNumber::one(4);
  for (int t = 0; t < 20; ++t) {
    const CDNumber x = random_cd(rng, 4, 5);
    CHECK(one * x == x);
    CHECK(x * one == x);
    if (!x.is_zero()) {
      CHECK(x * inverse(x) == one);
      CHECK(inverse(x) * x == one);
      CHECK(conjugate(inverse(x)) == inverse(conjugate(x)));
    }
  }
  CHECK(inverse(one) == one);
  CHECK(inverse(scale(Rational(2), CDNumber::basis(4, 5))) == scale(Rational(-1, 2), CDNumber::basis(4, 5)));
  CHECK_THROWS_AS(inverse(CDNumber::zero(4)), ZeroElementError);

  for (int t = 0; t < 20; ++t) {
    const CDNumber a = random_cd(rng, 3, 5);
    const CDNumber c = random_cd(rng, 3, 5);
    const CDNumber d = random_cd(rng, 3, 5);
    const CDNumber x = CDNumber::join(a, CDNumber::zero(3));
    const CDNumber y = CDNumber::join(c, d);
    const CDNumber expect = CDNumber::join(a * c, conjugate(a) * d);
    CHECK(mul_conway_smith(x, y) == expect);
    CHECK(mul_conway_smith_reference(x, y) == expect);
    CHECK(mul_16on_simplified(x, y) == expect);
  }
}

TEST_CASE("octonion basis table matches the frozen golden file") {
  std::ifstream in(SP16_GOLDEN_DIR "/octonion_table.txt");
  REQUIRE(in);
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> row;
    for (std::string w; words >> w;) row.push_back(w);
    rows.push_back(row);
  }
  REQUIRE(rows.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    REQUIRE(rows[i].size() == 8);
    for (std::size_t j = 0; j < 8; ++j) {
      const std::string& cell = rows[i][j];
      const int sign = cell[0] == '-' ? -1 : 1;
      const auto index = static_cast<std::size_t>(std::stoi(cell.substr(1)));
      const CDNumber expect = scale(Rational(sign), CDNumber::basis(3, index));
      CAPTURE(i);
      CAPTURE(j);
      CHECK(mul_conway_smith(CDNumber::basis(3, i), CDNumber::basis(3, j)) == expect);
      CHECK(mul_conway_smith_reference(CDNumber::basis(3, i), CDNumber::basis(3, j)) == expect);
      const BasisProduct bp = basis_product(3, i, j);
      CHECK(bp.sign == sign);
      CHECK(bp.index == index);
    }
  }
}

TEST_CASE("table product agrees with the verbatim recursion on every 16-on basis pair") {
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      const CDNumber x = CDNumber::basis(4, i);
      const CDNumber y = CDNumber::basis(4, j);
      CHECK(mul_conway_smith(x, y) == mul_conway_smith_reference(x, y));
    }
  }
}

TEST_CASE("simplified 16-on product agrees with the general one") {
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    const CDNumber x = random_cd(rng, 4, 4);
    const CDNumber y = random_cd(rng, 4, 4);
    CHECK(mul_16on_simplified(x, y) == mul_conway_smith(x, y));
  }
  CHECK_THROWS_AS(mul_16on_simplified(CDNumber::one(3), CDNumber::one(3)), LevelError);
}

TEST_CASE("16-ons are neither associative nor right alternative") {
  const CDNumber e1 = CDNumber::basis(4, 1);
  const CDNumber e2 = CDNumber::basis(4, 2);
  Rng rng(17);
  bool assoc_fails = false;
  for (int t = 0; t < 20 && !assoc_fails; ++t) {
    const CDNumber x = random_cd(rng, 4, 3);
    const CDNumber y = random_cd(rng, 4, 3);
    const CDNumber z = random_cd(rng, 4, 3);
    assoc_fails = (x * y) * z != x * (y * z);
  }
  CHECK(assoc_fails);
  CHECK(e1 * e2 == -(e2 * e1));
  bool right_alt_fails = false;
  for (int t = 0; t < 20 && !right_alt_fails; ++t) {
    const CDNumber x = random_cd(rng, 4, 3);
    const CDNumber y = random_cd(rng, 4, 3);
    right_alt_fails = (y * x) * x != y * (x * x);
  }
  CHECK(right_alt_fails);
}

TEST_CASE("niners") {
  CHECK(is_niner(CDNumber::one(4)));
  CHECK_FALSE(is_niner(CDNumber::basis(4, 15)));
  CHECK(is_niner(CDNumber::basis(4, 8)));
  CHECK_FALSE(is_niner(CDNumber::basis(4, 9)));
  CHECK_THROWS_AS(is_niner(CDNumber::one(3)), LevelError);
  Rng rng(19);
  for (int t = 0; t < 20; ++t) {
    const CDNumber x = random_positive_niner(rng, 5);
    CHECK(is_niner(x));
    CHECK(is_niner(inverse(x)));
  }
}

TEST_CASE("niner right distributivity") {
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const CDNumber y = random_cd(rng, 4, 5);
    const CDNumber z = random_cd(rng, 4, 5);
    const CDNumber x = random_niner(rng, 5);
    CHECK((y + z) * x == y * x + z * x);
  }
}

TEST_CASE("right distributivity fails for a non-niner: frozen witness") {
  const auto triple = element_lines(SP16_GOLDEN_DIR "/right_distributivity_counterexample.set");
  REQUIRE(triple.size() == 3);
  const CDNumber& y = triple[0];
  const CDNumber& z = triple[1];
  const CDNumber& x = triple[2];
  CHECK_FALSE(is_niner(x));
  CHECK((y + z) * x != y * x + z * x);
  CHECK(mul_conway_smith_reference(y + z, x) != mul_conway_smith_reference(y, x) + mul_conway_smith_reference(z, x));
}

TEST_CASE("right distributivity fails for a non-niner: random search") {
  Rng rng(29);
  bool found = false;
  for (int t = 0; t < 100 && !found; ++t) {
    const CDNumber y = random_cd(rng, 4, 3);
    const CDNumber z = random_cd(rng, 4, 3);
    const CDNumber x = random_cd(rng, 4, 3);
    found = !is_niner(x) && (y + z) * x != y * x + z * x;
  }
  CHECK(found);
}

TEST_CASE("sign classes") {
  CHECK(sign_class(all_ones(4, 1)) == SignClass::AllPositive);
  CHECK(sign_class(all_ones(4, -1)) == SignClass::AllNegative);
  CHECK(sign_class(from_ints({1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})) == SignClass::HasZeroCoord);
  CHECK(sign_class(from_ints({1, -1, 2, 3})) == SignClass::Mixed);
  CHECK(same_privileged_orthant(all_ones(4, 1), all_ones(4, 3)));
  CHECK_FALSE(same_privileged_orthant(all_ones(4, 1), all_ones(4, -3)));
  CHECK_FALSE(same_privileged_orthant(CDNumber::one(4), CDNumber::one(4)));

  const std::vector<std::size_t> support{0, 3};
  CHECK(sign_class_on(from_ints({2, 0, 0, 5}), support) == SignClass::AllPositive);
  CHECK(sign_class_on(from_ints({-2, 0, 0, -5}), support) == SignClass::AllNegative);
  CHECK(sign_class_on(from_ints({2, 0, 0, 0}), support) == SignClass::HasZeroCoord);
  CHECK(sign_class_on(from_ints({2, 0, 0, -1}), support) == SignClass::Mixed);
}

TEST_CASE("embedding") {
  CHECK(embed(CDNumber::one(0), 4) == CDNumber::one(4));
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    const CDNumber x = random_cd(rng, 3, 5);
    const CDNumber y = random_cd(rng, 3, 5);
    const CDNumber ex = embed(x, 4);
    CHECK(is_niner(ex));
    for (std::size_t i = 8; i < 16; ++i) CHECK(ex[i].is_zero());
    CHECK(ex * embed(y, 4) == embed(x * y, 4));
  }
  CHECK_THROWS_AS(embed(CDNumber::one(4), 3), LevelError);
}

TEST_CASE("octonion inverse identities") {
  Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    const CDNumber x = random_cd(rng, 3, 5);
    const CDNumber y = random_cd(rng, 3, 5);
    if (x.is_zero()) continue;
    CHECK((y * x) * inverse(x) == y);
    CHECK(inverse(x) * (x * y) == y);
  }
}

TEST_CASE("canonical text") {
  CHECK(CDNumber(2, {Rational(1), Rational(0), Rational(1, 2), Rational(-3)}).to_string() == "L2[1, 0, 1/2, -3]");
}
