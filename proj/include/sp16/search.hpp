#pragma once

// Seeded local search over finite niner sets inside one privileged orthant,
// maximising the exact ratio sum |S_x| / |union S_x|.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp16/bound_pipeline.hpp"
#include "sp16/random.hpp"

namespace sp16 {

enum class Generator { random, geometric, lattice_slice };
enum class Move { replace_element, perturb_coordinate, add_element, remove_element };
enum class Acceptance { hill_climb, anneal };

const char* to_string(Generator g);
const char* to_string(Move m);
const char* to_string(Acceptance a);

struct SearchConfig {
  std::size_t min_size = 4;
  std::size_t max_size = 8;
  std::int64_t coordinate_bound = 6;  // bound on numerators and denominators of generated coordinates
  Generator generator = Generator::geometric;
  std::vector<Move> moves{Move::replace_element, Move::perturb_coordinate, Move::add_element,
                          Move::remove_element};
  std::uint64_t iterations = 200;
  std::uint64_t seed = 1;
  Acceptance acceptance = Acceptance::hill_climb;
  Rational initial_temperature{1, 2};
  Rational decay{19, 20};
};

/// Throws ValidationError naming the offending field.
void validate(const SearchConfig& config);

/// A set of distinct niners, each strictly positive on the set's coordinate
/// support. `geometric` returns {g, g^2, ..., g^k} with g^j = g * g^(j-1)
/// when every power stays a positive niner, falling back to `random`.
/// Geometric powers are exempt from the coordinate bound.
ElementSet generate_candidate(const SearchConfig& config, Rng& rng);

struct MoveResult {
  ElementSet set;
  bool applied = false;
};

/// Applies one move; returns the input unchanged with applied = false when
/// the move cannot keep the candidate constraints.
MoveResult local_move(const ElementSet& a, Move move, const SearchConfig& config, Rng& rng);

/// Niners only, 0 excluded, single privileged orthant on the set's support.
bool is_valid_candidate(const ElementSet& a);

enum class ScoreStatus { ok, degenerate, invalid, error };
const char* to_string(ScoreStatus s);

struct Score {
  Rational ratio;  // 1 for degenerate R, 0 for invalid or failed evaluations
  ScoreStatus status = ScoreStatus::ok;
  std::string note;
};

/// Certified sixteen_on evaluation with the search's scoring rules.
Score score_candidate(const ElementSet& a);

/// exp(-z) for z >= 0, floored onto the grid of multiples of 2^-48.
/// Absolute error is below 2^-40.
Rational exp_neg_approx(const Rational& z);

struct HistorySample {
  std::uint64_t iteration = 0;
  std::string move;  // "initial" for iteration 0
  bool applied = false;
  bool accepted = false;
  Rational candidate_ratio;
  Rational current_ratio;
  Rational best_ratio;
};

struct SearchRecord {
  SearchConfig config;
  ElementSet initial_set;
  ElementSet best_set;
  Score best_score;
  std::optional<BoundReport> best_report;  // absent when the best set has degenerate R
  std::vector<HistorySample> history;
  std::uint64_t evaluations = 0;
  std::vector<std::string> evaluation_log;  // failed evaluations, in order
};

/// Deterministic in (config, seed). The best set is re-evaluated from
/// scratch before returning; a mismatch throws.
SearchRecord run_search(const SearchConfig& config);

}  // namespace sp16
