#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "abac/word.hpp"

namespace abac {

using Digit = std::uint8_t;

/// Digits of a U-representation, most significant first.
struct DigitString {
  std::vector<Digit> digits;

  std::size_t size() const noexcept { return digits.size(); }
  bool empty() const noexcept { return digits.empty(); }

  static DigitString parse(std::string_view text);  // "1001000101011"
  std::string str() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
  friend auto operator<=>(const DigitString&, const DigitString&) = default;
};

DigitString strip_leading_zeros(DigitString d);

/// Normal (greedy) U-representation of n; empty for n == 0.
DigitString greedy_representation(const Substitution& subst, std::int64_t n);

/// sum d_j U_j. Throws DomainError for digits > alpha_0 or on overflow.
std::uint64_t value_of(const Substitution& subst, const DigitString& digits);

/// True iff digits (leading zeros ignored) are the greedy representation of their value.
bool is_normal(const Substitution& subst, const DigitString& digits);

/// Finite automaton recognizing normal U-representations (leading zeros allowed).
///
/// A digit string is normal iff every suffix is lexicographically at most the
/// prefix of the same length of (a0 a1 ... a(m-2) (a(m-1)-1))^omega. States
/// are sets of offsets into that periodic word at which a suffix still ties;
/// the constructor checks the accepted-string counts against U_L.
class AdmissibilityAutomaton {
 public:
  static constexpr int kReject = -1;

  explicit AdmissibilityAutomaton(const Substitution& subst);

  int start() const noexcept { return 0; }
  int state_count() const noexcept { return static_cast<int>(next_.size()); }
  int max_digit() const noexcept { return max_digit_; }
  /// Next state or kReject.
  int next(int state, int digit) const { return next_[static_cast<std::size_t>(state)][static_cast<std::size_t>(digit)]; }
  bool accepts(const DigitString& d) const;

 private:
  int max_digit_ = 0;
  std::vector<std::vector<int>> next_;
};

}  // namespace abac
