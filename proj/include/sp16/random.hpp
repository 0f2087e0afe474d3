#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sp16/cdnumber.hpp"

namespace sp16 {

/// Seeded generator whose draws are identical on every platform:
/// mt19937_64 is fully specified by the standard, and the range reduction
/// below does not depend on the library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return (next() >> 63U) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// num/den with |num| <= bound and 1 <= den <= bound.
Rational random_rational(Rng& rng, std::int64_t bound);
/// num/den with 1 <= num, den <= bound.
Rational random_positive_rational(Rng& rng, std::int64_t bound);

CDNumber random_cd(Rng& rng, int level, std::int64_t bound);
/// A level-4 element with random coordinates 0..8 and zeros elsewhere.
CDNumber random_niner(Rng& rng, std::int64_t bound);
/// Same, with every one of coordinates 0..8 strictly positive.
CDNumber random_positive_niner(Rng& rng, std::int64_t bound);

}  // namespace sp16
