#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abac {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

/// Simple Parry substitution 0 -> 0^a0 1, 1 -> 0^a1 2, ..., (m-1) -> 0^a(m-1).
///
/// The m-bonacci substitution is the case a_i = 1 for every i. Construction
/// validates a0 >= 1, a_l <= a0, and a(m-1) >= 1 (the last image must be
/// nonempty for the substitution to be non-erasing).
class Substitution {
 public:
  static Substitution m_bonacci(int m);
  static Substitution from_alpha(std::vector<int> alpha);

  int m() const noexcept { return static_cast<int>(alpha_.size()); }
  const std::vector<int>& alpha() const noexcept { return alpha_; }
  int alpha0() const noexcept { return alpha_.front(); }
  int max_digit() const noexcept { return alpha_.front(); }
  bool is_m_bonacci() const noexcept;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  explicit Substitution(std::vector<int> alpha) : alpha_(std::move(alpha)) {}

  std::vector<int> alpha_;
};

/// Parikh vector of a word, or a difference of two of them (hence signed).
struct ParikhVector {
  std::vector<std::int32_t> counts;

  ParikhVector() = default;
  explicit ParikhVector(int m) : counts(static_cast<std::size_t>(m), 0) {}
  explicit ParikhVector(std::vector<std::int32_t> c) : counts(std::move(c)) {}

  std::size_t size() const noexcept { return counts.size(); }
  std::int32_t operator[](std::size_t i) const { return counts[i]; }
  std::int32_t& operator[](std::size_t i) { return counts[i]; }

  ParikhVector& operator+=(const ParikhVector& o);
  ParikhVector& operator-=(const ParikhVector& o);
  friend ParikhVector operator+(ParikhVector a, const ParikhVector& b) { return a += b; }
  friend ParikhVector operator-(ParikhVector a, const ParikhVector& b) { return a -= b; }

  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
};

std::string to_string(const ParikhVector& v);  // "(-1,1,0)"

/// phi(letter). Throws InvalidLetter when letter >= m.
Word substitution_image(const Substitution& subst, int letter);

/// Letterwise phi(w).
Word apply_substitution(const Substitution& subst, std::span<const Letter> w);

/// Prefix of the fixed point phi^inf(0) of exactly `length` letters.
Word fixed_point_prefix(const Substitution& subst, std::size_t length);

/// phi^k(letter).
Word iterate_image(const Substitution& subst, int letter, int k);

/// U_0..U_k with U_j = |phi^j(0)|. Throws DomainError on 64-bit overflow.
std::vector<std::uint64_t> lengths_u(const Substitution& subst, int k);

ParikhVector parikh(std::span<const Letter> w, int m);

/// Renders a word as ASCII digits ("0102"); parses the same format.
std::string to_string(std::span<const Letter> w);
Word parse_word(std::string_view text);

}  // namespace abac
