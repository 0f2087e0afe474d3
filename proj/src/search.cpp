#include "sp16/search.hpp"

#include <algorithm>

#include "sp16/errors.hpp"

namespace sp16 {

namespace {

constexpr int kMaxTries = 64;
constexpr unsigned kAcceptanceBits = 48;

CDNumber fresh_element(const std::vector<std::size_t>& support, std::int64_t bound, Rng& rng) {
  std::vector<Rational> coords(dimension(kMaxLevel));
  for (std::size_t i : support) coords[i] = random_positive_rational(rng, bound);
  return CDNumber(kMaxLevel, std::move(coords));
}

std::vector<std::size_t> niner_support() {
  std::vector<std::size_t> s(kNinerSupport);
  for (std::size_t i = 0; i < kNinerSupport; ++i) s[i] = i;
  return s;
}

ElementSet distinct_fresh_set(const std::vector<std::size_t>& support, std::size_t k, std::int64_t bound,
                              Rng& rng) {
  std::vector<CDNumber> out;
  for (int tries = 0; out.size() < k; ++tries) {
    if (tries > kMaxTries * static_cast<int>(k)) {
      throw Error("generate_candidate: could not draw " + std::to_string(k) + " distinct elements");
    }
    CDNumber x = fresh_element(support, bound, rng);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return ElementSet(kMaxLevel, std::move(out));
}

ElementSet lattice_slice(std::size_t k, std::int64_t bound, Rng& rng) {
  const auto axis = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(kNinerSupport) - 1));
  std::vector<CDNumber> out;
  for (int tries = 0; out.size() < k; ++tries) {
    if (tries > kMaxTries * static_cast<int>(k)) throw Error("lattice_slice: too few lattice points");
    std::vector<Rational> coords(dimension(kMaxLevel));
    coords[0] = Rational(rng.uniform(1, bound));
    coords[axis] = Rational(rng.uniform(1, bound));
    CDNumber x(kMaxLevel, std::move(coords));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return ElementSet(kMaxLevel, std::move(out));
}

}  // namespace

const char* to_string(Generator g) {
  switch (g) {
    case Generator::random: return "random";
    case Generator::geometric: return "geometric";
    case Generator::lattice_slice: return "lattice_slice";
  }
  return "?";
}

const char* to_string(Move m) {
  switch (m) {
    case Move::replace_element: return "replace_element";
    case Move::perturb_coordinate: return "perturb_coordinate";
    case Move::add_element: return "add_element";
    case Move::remove_element: return "remove_element";
  }
  return "?";
}

const char* to_string(Acceptance a) { return a == Acceptance::hill_climb ? "hill_climb" : "anneal"; }

const char* to_string(ScoreStatus s) {
  switch (s) {
    case ScoreStatus::ok: return "ok";
    case ScoreStatus::degenerate: return "degenerate";
    case ScoreStatus::invalid: return "invalid";
    case ScoreStatus::error: return "error";
  }
  return "?";
}

void validate(const SearchConfig& config) {
  if (config.min_size < 3) throw ValidationError("config field 'set_size_range': minimum must be at least 3");
  if (config.max_size < config.min_size) {
    throw ValidationError("config field 'set_size_range': maximum must be >= minimum");
  }
  if (config.coordinate_bound < 2) throw ValidationError("config field 'coordinate_bound': must be at least 2");
  if (config.generator == Generator::lattice_slice &&
      static_cast<std::size_t>(config.coordinate_bound * config.coordinate_bound) < config.max_size) {
    throw ValidationError(
        "config field 'coordinate_bound': lattice_slice needs coordinate_bound^2 >= maximum set size");
  }
  if (config.moves.empty()) throw ValidationError("config field 'moves': at least one move is required");
  if (config.initial_temperature.sign() <= 0) {
    throw ValidationError("config field 'anneal_schedule.initial_temperature': must be positive");
  }
  if (config.decay.sign() <= 0 || config.decay > Rational(1)) {
    throw ValidationError("config field 'anneal_schedule.decay': must lie in (0, 1]");
  }
}

bool is_valid_candidate(const ElementSet& a) {
  return !a.empty() && !a.contains_zero() && is_all_niner(a) && lies_in_single_privileged_orthant(a);
}

namespace {

std::optional<ElementSet> geometric_powers(const CDNumber& g, std::size_t k) {
  const std::vector<std::size_t> support = coordinate_support(ElementSet{g});
  if (norm_sq(g) == Rational(1)) return std::nullopt;
  std::vector<CDNumber> powers{g};
  while (powers.size() < k) {
    CDNumber next = g * powers.back();
    if (!is_niner(next) || sign_class_on(next, support) != SignClass::AllPositive) return std::nullopt;
    powers.push_back(std::move(next));
  }
  return ElementSet(kMaxLevel, std::move(powers));
}

}  // namespace

ElementSet generate_candidate(const SearchConfig& config, Rng& rng) {
  const auto k = static_cast<std::size_t>(
      rng.uniform(static_cast<std::int64_t>(config.min_size), static_cast<std::int64_t>(config.max_size)));
  const std::int64_t bound = config.coordinate_bound;

  ElementSet out(kMaxLevel);
  switch (config.generator) {
    case Generator::random:
      out = distinct_fresh_set(niner_support(), k, bound, rng);
      break;
    case Generator::lattice_slice:
      out = lattice_slice(k, bound, rng);
      break;
    case Generator::geometric: {
      bool found = false;
      for (int tries = 0; tries < kMaxTries && !found; ++tries) {
        std::vector<std::size_t> support{0};
        const std::int64_t family = rng.uniform(0, 2);
        if (family == 1) support.push_back(static_cast<std::size_t>(rng.uniform(1, 8)));
        if (family == 2) support = niner_support();
        if (auto powers = geometric_powers(fresh_element(support, bound, rng), k)) {
          out = std::move(*powers);
          found = true;
        }
      }
      if (!found) out = distinct_fresh_set(niner_support(), k, bound, rng);
      break;
    }
  }
  if (!is_valid_candidate(out)) throw Error("generate_candidate: produced an invalid candidate");
  return out;
}

MoveResult local_move(const ElementSet& a, Move move, const SearchConfig& config, Rng& rng) {
  const MoveResult unchanged{a, false};
  if (a.empty()) return unchanged;
  const auto support = coordinate_support(a);
  const std::int64_t bound = config.coordinate_bound;
  std::vector<CDNumber> elems = a.elements();

  const auto fresh_outside = [&]() -> std::optional<CDNumber> {
    for (int tries = 0; tries < kMaxTries; ++tries) {
      CDNumber x = fresh_element(support, bound, rng);
      if (!a.contains(x)) return x;
    }
    return std::nullopt;
  };

  switch (move) {
    case Move::replace_element: {
      const std::size_t idx = rng.index(elems.size());
      auto x = fresh_outside();
      if (!x) return unchanged;
      elems[idx] = std::move(*x);
      break;
    }
    case Move::perturb_coordinate: {
      const std::size_t idx = rng.index(elems.size());
      const std::size_t coord = support[rng.index(support.size())];
      const CDNumber& target = elems[idx];
      Rational smallest = target[support[0]];
      for (std::size_t i : support) smallest = std::min(smallest, target[i]);
      std::optional<Rational> replacement;
      for (int tries = 0; tries < kMaxTries && !replacement; ++tries) {
        Rational c = random_positive_rational(rng, bound);
        if (c != target[coord] && abs(c - target[coord]) < smallest) replacement = std::move(c);
      }
      if (!replacement) return unchanged;
      std::vector<Rational> coords(target.coords().begin(), target.coords().end());
      coords[coord] = *replacement;
      CDNumber moved(kMaxLevel, std::move(coords));
      if (a.contains(moved)) return unchanged;
      elems[idx] = std::move(moved);
      break;
    }
    case Move::add_element: {
      if (elems.size() >= config.max_size) return unchanged;
      auto x = fresh_outside();
      if (!x) return unchanged;
      elems.push_back(std::move(*x));
      break;
    }
    case Move::remove_element: {
      if (elems.size() <= config.min_size) return unchanged;
      elems.erase(elems.begin() + static_cast<std::ptrdiff_t>(rng.index(elems.size())));
      break;
    }
  }
  ElementSet out(kMaxLevel, std::move(elems));
  if (!is_valid_candidate(out)) return unchanged;
  return MoveResult{std::move(out), true};
}

Score score_candidate(const ElementSet& a) {
  if (!is_valid_candidate(a)) {
    return Score{Rational(0), ScoreStatus::invalid, "candidate violates niner/orthant/nonzero constraints"};
  }
  try {
    EvalOptions options;
    options.mode = Mode::sixteen_on;
    const BoundReport report = evaluate_bound(a, options);
    if (!report.computed) return Score{Rational(0), ScoreStatus::invalid, report.uncertified_reason};
    if (report.sanity_violation) {
      return Score{Rational(0), ScoreStatus::error, "k16_lower exceeds 7332: probable implementation bug"};
    }
    return Score{report.ratio, ScoreStatus::ok, {}};
  } catch (const DegenerateRError& e) {
    return Score{Rational(1), ScoreStatus::degenerate, e.what()};
  } catch (const std::exception& e) {
    return Score{Rational(0), ScoreStatus::error, e.what()};
  }
}

Rational exp_neg_approx(const Rational& z) {
  if (z.sign() < 0) throw std::invalid_argument("exp_neg_approx: argument must be >= 0");
  constexpr unsigned kWorkBits = 64;
  if (z >= Rational(40)) return Rational(0);  // e^-40 < 2^-57

  // e^-z = (e^-(z/2^k))^(2^k) with z/2^k <= 1/2
  unsigned halvings = 0;
  Rational y = z;
  while (y > Rational(1, 2)) {
    y /= Rational(2);
    ++halvings;
  }
  y = floor_to_dyadic(y, kWorkBits);

  Rational sum(1);
  Rational term(1);
  for (int n = 1; n <= 24; ++n) {
    term = floor_to_dyadic(term * y / Rational(n), kWorkBits);
    sum += (n % 2 == 1) ? -term : term;
  }
  sum = floor_to_dyadic(sum, kWorkBits);
  for (unsigned i = 0; i < halvings; ++i) sum = floor_to_dyadic(sum * sum, kWorkBits);
  return floor_to_dyadic(sum, kAcceptanceBits);
}

SearchRecord run_search(const SearchConfig& config) {
  validate(config);
  Rng rng(config.seed);

  SearchRecord record;
  record.config = config;
  record.initial_set = generate_candidate(config, rng);

  const auto evaluate = [&](const ElementSet& a, std::uint64_t iteration) {
    Score s = score_candidate(a);
    ++record.evaluations;
    if (s.status == ScoreStatus::error || s.status == ScoreStatus::invalid) {
      record.evaluation_log.push_back("iteration " + std::to_string(iteration) + ": " + to_string(s.status) +
                                      ": " + s.note);
    }
    return s;
  };

  ElementSet current = record.initial_set;
  Score current_score = evaluate(current, 0);
  record.best_set = current;
  record.best_score = current_score;
  record.history.push_back(
      HistorySample{0, "initial", true, true, current_score.ratio, current_score.ratio, current_score.ratio});

  Rational temperature = config.initial_temperature;
  for (std::uint64_t it = 1; it <= config.iterations; ++it) {
    const Move move = config.moves[rng.index(config.moves.size())];
    MoveResult moved = local_move(current, move, config, rng);
    HistorySample sample{it, to_string(move), moved.applied, false, current_score.ratio, current_score.ratio,
                         record.best_score.ratio};
    if (moved.applied) {
      const Score candidate = evaluate(moved.set, it);
      sample.candidate_ratio = candidate.ratio;
      bool accept = candidate.ratio >= current_score.ratio;
      if (!accept && config.acceptance == Acceptance::anneal && temperature.sign() > 0) {
        const Rational p = exp_neg_approx((current_score.ratio - candidate.ratio) / temperature);
        const Rational draw(mpq_class(mpz_class(static_cast<unsigned long>(rng.next() >> 16U)),
                                      mpz_class(1) << kAcceptanceBits));
        accept = draw < p;
      }
      // best >= current always, so an improving candidate is always accepted
      if (accept) {
        current = std::move(moved.set);
        current_score = candidate;
        if (current_score.ratio > record.best_score.ratio) {
          record.best_set = current;
          record.best_score = current_score;
        }
      }
      sample.accepted = accept;
      sample.current_ratio = current_score.ratio;
      sample.best_ratio = record.best_score.ratio;
    }
    if (config.acceptance == Acceptance::anneal) {
      temperature = floor_to_dyadic(temperature * config.decay, kAcceptanceBits);
    }
    record.history.push_back(std::move(sample));
  }

  // Re-verify the best set from scratch.
  const Score fresh = score_candidate(record.best_set);
  if (fresh.ratio != record.best_score.ratio || fresh.status != record.best_score.status) {
    throw Error("run_search: best set re-evaluated to " + fresh.ratio.to_string() + ", recorded " +
                record.best_score.ratio.to_string());
  }
  if (fresh.status == ScoreStatus::ok) {
    EvalOptions options;
    options.mode = Mode::sixteen_on;
    record.best_report = evaluate_bound(record.best_set, options);
  }
  return record;
}

}  // namespace sp16
