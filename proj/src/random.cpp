#include "sp16/random.hpp"

#include <stdexcept>

namespace sp16 {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1U;
  if (span == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<std::int64_t>(draw % span);
}

Rational random_rational(Rng& rng, std::int64_t bound) {
  const std::int64_t num = rng.uniform(-bound, bound);
  return Rational(num, rng.uniform(1, bound));
}

Rational random_positive_rational(Rng& rng, std::int64_t bound) {
  const std::int64_t num = rng.uniform(1, bound);
  return Rational(num, rng.uniform(1, bound));
}

CDNumber random_cd(Rng& rng, int level, std::int64_t bound) {
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < dimension(level); ++i) coords.push_back(random_rational(rng, bound));
  return CDNumber(level, std::move(coords));
}

CDNumber random_niner(Rng& rng, std::int64_t bound) {
  std::vector<Rational> coords(dimension(kMaxLevel));
  for (std::size_t i = 0; i < kNinerSupport; ++i) coords[i] = random_rational(rng, bound);
  return CDNumber(kMaxLevel, std::move(coords));
}

CDNumber random_positive_niner(Rng& rng, std::int64_t bound) {
  std::vector<Rational> coords(dimension(kMaxLevel));
  for (std::size_t i = 0; i < kNinerSupport; ++i) coords[i] = random_positive_rational(rng, bound);
  return CDNumber(kMaxLevel, std::move(coords));
}

}  // namespace sp16
