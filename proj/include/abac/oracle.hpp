#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "abac/word.hpp"

namespace abac {

/// Parikh vectors of all length-n windows of a fixed-point prefix.
struct WindowScan {
  std::size_t prefix_length = 0;
  std::int64_t n = 0;
  std::vector<ParikhVector> vectors;  // sorted, distinct
};

/// Windows of length n inside the first `prefix_length` letters of the fixed point.
WindowScan scan_prefix(const Substitution& subst, std::int64_t n, std::size_t prefix_length);

/// scan_prefix with the prefix doubled from max(8n, 4096) until three
/// successive scans agree.
WindowScan brute_force_scan(const Substitution& subst, std::int64_t n);

std::vector<ParikhVector> brute_force_parikh_set(const Substitution& subst, std::int64_t n);

/// Parikh set shifted by -Psi(u[n]).
std::vector<ParikhVector> brute_force_rel_set(const Substitution& subst, std::int64_t n);

/// Max over n <= n_max and letters l of the spread of |w|_l among length-n factors.
int brute_force_balance(const Substitution& subst, std::int64_t n_max);

}  // namespace abac
