#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abac/automaton_types.hpp"
#include "abac/codecomp.hpp"
#include "abac/word.hpp"

namespace abac {

/// Order in which the state sweep of one closure iteration visits (state, digit).
enum class SweepOrder {
  kDigitMajor,  ///< for d: for q  (the reference state numbering)
  kStateMajor,  ///< for q: for d
};

struct ExploreOptions {
  /// Refined co-decomposition (cut only before a 0 in the bottom word).
  /// Defaults to on exactly for substitutions that are not m-bonacci.
  std::optional<bool> refined;
  /// Track admissibility of the digit strings. Same default as `refined`.
  std::optional<bool> track_admissibility;
  SweepOrder order = SweepOrder::kDigitMajor;
  /// Safety cap on while-loop iterations; ABAC_MAX_ITER overrides the default.
  std::size_t max_iterations = 0;
};

/// What one pass of the discovery loop found. Ranges are 1-based and empty when first > last.
struct ClosureIteration {
  int k = 0;
  PairId first_new_pair = 0;
  PairId last_new_pair = 0;
  int first_new_state = 0;
  int last_new_state = 0;
};

/// Result of the fixed-point exploration. States are 1-based (q = 1..M).
struct ClosureTables {
  std::vector<int> alpha;
  bool refined = false;
  bool tracks_admissibility = false;
  PairCatalog catalog;
  /// d_images[d][j-1] = D_d(zeta_j); empty optional where the digit cannot follow.
  std::vector<std::vector<std::optional<ZSet>>> d_images;
  std::vector<ZSet> zsets;
  /// Admissibility-automaton state attached to each Z-set (always 0 when untracked).
  std::vector<int> admissibility;
  /// delta[q-1][d]; 0 marks an inadmissible digit (general mode only).
  std::vector<std::vector<int>> delta;
  std::vector<int> tau;
  /// seeds[n-1] = state of Z(n) for n = 1..alpha_0.
  std::vector<int> seeds;
  std::vector<ClosureIteration> progress;

  int m() const noexcept { return static_cast<int>(alpha.size()); }
  int max_digit() const noexcept { return alpha.front(); }
  int state_count() const noexcept { return static_cast<int>(zsets.size()); }
  const ZSet& zset(int q) const;
};

/// Default iteration cap, honoring the ABAC_MAX_ITER environment variable.
std::size_t default_max_iterations();

ClosureTables explore(const Substitution& subst, const ExploreOptions& options = {});

/// tau(q) = # union of vect over Z_q.
int output_value(const ClosureTables& tables, int q);

/// DFAO over states 0..M (plus a reject sink when admissibility is tracked).
Dfao build_dfao(const ClosureTables& tables);

}  // namespace abac
