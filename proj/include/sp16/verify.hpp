#pragma once

// Seeded exact property suites behind `sp16 verify`.

#include <cstdint>
#include <deque>
#include <string>

#include "sp16/element_set.hpp"
#include "sp16/random.hpp"

namespace sp16 {

struct LawTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
  // The law is a witness search: it passes when at least one case fails.
  bool expect_counterexample = false;

  /// A law that was never exercised does not pass.
  bool pass() const { return checked > 0 && (expect_counterexample ? failures > 0 : failures == 0); }
  void record(bool ok, const std::string& detail = {});
};

struct SuiteReport {
  std::string suite;
  std::deque<LawTally> laws;  // stable references while laws are added

  bool ok() const;
  LawTally& law(const std::string& name);
  const LawTally* find(const std::string& name) const;
};

/// The ten laws of the 16-on proposition at level 4, plus norm
/// multiplicativity at levels 0..3, simplified == general product, fast ==
/// reference product, octonion inverse identities, embedding, niner right
/// distributivity and the non-niner failure witness.
SuiteReport verify_algebra(std::uint64_t trials, std::uint64_t seed);

/// E' by quadruple count against sum ell*r, the left-quotient mass identity
/// sum_{x in AA^-1} ell(x) = |A|^2, and the inverse-closed energy bound.
SuiteReport verify_setops(std::uint64_t trials, std::uint64_t seed);

/// Chain audit, ball lemma and sanity ceiling on generated certified sets.
SuiteReport verify_pipeline(std::uint64_t trials, std::uint64_t seed);

std::string render_suite(const SuiteReport& report);

/// Random set of `size` distinct nonzero elements at `level`.
ElementSet random_set(Rng& rng, int level, std::size_t size, std::int64_t bound);

/// {g_1, ..., g_k} together with their inverses, niners when level is 4.
ElementSet random_inverse_closed_set(Rng& rng, int level, std::size_t generators, std::int64_t bound);

/// A real or complex-slice geometric progression {g, g^2, ..., g^k} in the
/// positive orthant of its support, as a level-4 niner set.
ElementSet random_geometric_niner_set(Rng& rng, std::size_t k);

}  // namespace sp16
