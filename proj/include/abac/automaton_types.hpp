#pragma once

#include <cstdint>
#include <vector>

namespace abac {

/// Output of states that do not correspond to any n >= 1 (initial state, reject sink).
inline constexpr int kNoOutput = -1;

/// Complete deterministic automaton with output over digits 0..max_digit.
/// `alpha` records the numeration system the input digits belong to.
struct Dfao {
  std::vector<int> alpha;
  int max_digit = 1;
  int initial = 0;
  std::vector<std::int32_t> transitions;  // row-major [state][digit]
  std::vector<int> outputs;

  int state_count() const noexcept { return static_cast<int>(outputs.size()); }
  int radix() const noexcept { return max_digit + 1; }
  int next(int q, int d) const { return transitions[static_cast<std::size_t>(q * radix() + d)]; }
  void set_next(int q, int d, int to) { transitions[static_cast<std::size_t>(q * radix() + d)] = to; }

  friend bool operator==(const Dfao&, const Dfao&) = default;
};

/// Complete DFA with accepting set over digits 0..max_digit.
struct Dfa {
  std::vector<int> alpha;
  int max_digit = 1;
  int initial = 0;
  std::vector<std::int32_t> transitions;  // row-major [state][digit]
  std::vector<std::uint8_t> accepting;

  int state_count() const noexcept { return static_cast<int>(accepting.size()); }
  int radix() const noexcept { return max_digit + 1; }
  int next(int q, int d) const { return transitions[static_cast<std::size_t>(q * radix() + d)]; }
  void set_next(int q, int d, int to) { transitions[static_cast<std::size_t>(q * radix() + d)] = to; }

  friend bool operator==(const Dfa&, const Dfa&) = default;
};

}  // namespace abac
