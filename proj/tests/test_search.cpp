#include <cmath>

#include "doctest.h"
#include "sp16/errors.hpp"
#include "sp16/io.hpp"
#include "sp16/search.hpp"

using namespace sp16;

namespace {

SearchConfig small_config(Generator g, std::uint64_t seed, std::uint64_t iterations) {
  SearchConfig c;
  c.generator = g;
  c.seed = seed;
  c.iterations = iterations;
  c.min_size = 3;
  c.max_size = 6;
  c.coordinate_bound = 4;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW(validate(SearchConfig{}));
  SearchConfig c;
  c.min_size = 2;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.max_size = 3;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.coordinate_bound = 1;
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.moves.clear();
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.initial_temperature = Rational(0);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.decay = Rational(3, 2);
  CHECK_THROWS_AS(validate(c), ValidationError);
  c = SearchConfig{};
  c.generator = Generator::lattice_slice;
  c.coordinate_bound = 2;
  c.max_size = 5;
  CHECK_THROWS_AS(validate(c), ValidationError);
}

TEST_CASE("generated candidates satisfy the constraints") {
  for (Generator g : {Generator::random, Generator::geometric, Generator::lattice_slice}) {
    Rng rng(71);
    const SearchConfig c = small_config(g, 1, 0);
    for (int t = 0; t < 20; ++t) {
      const ElementSet a = generate_candidate(c, rng);
      CAPTURE(to_string(g));
      CHECK(is_valid_candidate(a));
      CHECK(a.size() >= c.min_size);
      CHECK(a.size() <= c.max_size);
    }
  }
}

TEST_CASE("local moves keep the constraints") {
  Rng rng(73);
  const SearchConfig c = small_config(Generator::geometric, 1, 0);
  ElementSet a = generate_candidate(c, rng);
  for (int t = 0; t < 60; ++t) {
    const Move m = c.moves[static_cast<std::size_t>(t) % c.moves.size()];
    const MoveResult r = local_move(a, m, c, rng);
    CHECK(is_valid_candidate(r.set));
    CHECK(r.set.size() >= c.min_size);
    CHECK(r.set.size() <= c.max_size);
    if (!r.applied) {
      CHECK(r.set == a);
    }
    a = r.set;
  }
}

TEST_CASE("scoring") {
  const Score golden = score_candidate(real_set(4, {Rational(1), Rational(2), Rational(4), Rational(8)}));
  CHECK(golden.status == ScoreStatus::ok);
  CHECK(golden.ratio == Rational(9, 7));

  const Score degenerate = score_candidate(real_set(4, {Rational(1), Rational(2)}));
  CHECK(degenerate.status == ScoreStatus::degenerate);
  CHECK(degenerate.ratio == Rational(1));

  const Score invalid = score_candidate(ElementSet{CDNumber::basis(4, 12)});
  CHECK(invalid.status == ScoreStatus::invalid);
  CHECK(invalid.ratio == Rational(0));
}

TEST_CASE("fixed-precision exponential") {
  CHECK(exp_neg_approx(Rational(0)) == Rational(1));
  CHECK(exp_neg_approx(Rational(40)) == Rational(0));
  CHECK_THROWS(exp_neg_approx(Rational(-1)));
  Rational previous(2);
  for (int i = 0; i <= 400; ++i) {
    const Rational z(i, 10);
    const Rational e = exp_neg_approx(z);
    CAPTURE(i);
    CHECK(std::fabs(e.to_double() - std::exp(-z.to_double())) < std::ldexp(1.0, -40));
    CHECK(e <= previous);
    CHECK(e.denominator() <= (mpz_class(1) << 48));
    previous = e;
  }
  CHECK(std::fabs(exp_neg_approx(Rational(1, 3)).to_double() - std::exp(-1.0 / 3)) < std::ldexp(1.0, -40));
}

TEST_CASE("search is deterministic in the seed") {
  for (Acceptance acc : {Acceptance::hill_climb, Acceptance::anneal}) {
    SearchConfig c = small_config(Generator::geometric, 5, 25);
    c.acceptance = acc;
    const std::string first = render_search_record(run_search(c));
    const std::string second = render_search_record(run_search(c));
    CHECK(first == second);
  }
}

TEST_CASE("zero iterations returns the initial candidate") {
  const SearchRecord r = run_search(small_config(Generator::geometric, 3, 0));
  CHECK(r.best_set == r.initial_set);
  CHECK(r.history.size() == 1);
  CHECK(r.history[0].move == "initial");
}

TEST_CASE("hill climbing never lowers the current or best ratio") {
  const SearchRecord r = run_search(small_config(Generator::random, 9, 30));
  REQUIRE(r.history.size() == 31);
  for (std::size_t i = 1; i < r.history.size(); ++i) {
    CHECK(r.history[i].best_ratio >= r.history[i - 1].best_ratio);
    CHECK(r.history[i].current_ratio >= r.history[i - 1].current_ratio);
  }
  CHECK(r.best_score.ratio == r.history.back().best_ratio);
}

TEST_CASE("the reported best is re-evaluated") {
  const SearchRecord r = run_search(small_config(Generator::geometric, 11, 15));
  CHECK(score_candidate(r.best_set).ratio == r.best_score.ratio);
  if (r.best_score.status == ScoreStatus::ok) {
    REQUIRE(r.best_report);
    CHECK(r.best_report->ratio == r.best_score.ratio);
  }
}

TEST_CASE("generator details") {
  Rng rng(107);
  SearchConfig c;
  c.generator = Generator::random;
  c.min_size = 4;
  c.max_size = 4;
  for (int t = 0; t < 10; ++t) {
    const ElementSet a = generate_candidate(c, rng);
    CHECK(a.size() == 4);
    for (const auto& x : a) CHECK(sign_class_on(x, coordinate_support(a)) == SignClass::AllPositive);
  }

  c.generator = Generator::geometric;
  int real_runs = 0;
  for (int t = 0; t < 40; ++t) {
    const ElementSet a = generate_candidate(c, rng);
    if (coordinate_support(a) != std::vector<std::size_t>{0}) continue;
    ++real_runs;
    const Rational step = a[1][0] / a[0][0];
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i][0] / a[i - 1][0] == step);
    CHECK((a[0][0] == step || a[a.size() - 1][0] * step == Rational(1)));
  }
  CHECK(real_runs > 0);
}

TEST_CASE("move edge cases") {
  Rng rng(109);
  SearchConfig c;
  c.min_size = 4;
  c.max_size = 4;
  const ElementSet a = generate_candidate(c, rng);
  const MoveResult removed = local_move(a, Move::remove_element, c, rng);
  CHECK_FALSE(removed.applied);
  CHECK(removed.set == a);
  const MoveResult added = local_move(a, Move::add_element, c, rng);
  CHECK_FALSE(added.applied);
  for (int t = 0; t < 10; ++t) {
    const MoveResult replaced = local_move(a, Move::replace_element, c, rng);
    CHECK(replaced.set.size() == a.size());
    const MoveResult perturbed = local_move(a, Move::perturb_coordinate, c, rng);
    CHECK(is_valid_candidate(perturbed.set));
  }
}

TEST_CASE("best ratio is the maximum seen") {
  SearchConfig c = small_config(Generator::geometric, 13, 30);
  c.acceptance = Acceptance::anneal;
  const SearchRecord r = run_search(c);
  Rational seen = r.history.front().candidate_ratio;
  for (const auto& h : r.history) {
    if (h.accepted) seen = std::max(seen, h.candidate_ratio);
  }
  CHECK(r.best_score.ratio == seen);
}
