#include "abac/word.hpp"

#include <algorithm>
#include <limits>

#include "abac/error.hpp"

namespace abac {

Substitution Substitution::m_bonacci(int m) {
  if (m < 2) throw DomainError("m-bonacci substitution needs m >= 2, got " + std::to_string(m));
  return Substitution(std::vector<int>(static_cast<std::size_t>(m), 1));
}

Substitution Substitution::from_alpha(std::vector<int> alpha) {
  if (alpha.size() < 2) throw DomainError("simple Parry substitution needs at least 2 letters");
  if (alpha.size() > 16) throw DomainError("alphabets larger than 16 letters are not supported");
  if (alpha.front() < 1) throw DomainError("alpha_0 must be at least 1");
  if (alpha.front() > 9) throw DomainError("alpha_0 must be at most 9 (digits are single characters)");
  for (int a : alpha) {
    if (a < 0 || a > alpha.front()) throw DomainError("exponents must satisfy 0 <= alpha_l <= alpha_0");
  }
  if (alpha.back() < 1) throw DomainError("alpha_{m-1} must be at least 1 (non-erasing substitution)");
  return Substitution(std::move(alpha));
}

bool Substitution::is_m_bonacci() const noexcept {
  return std::all_of(alpha_.begin(), alpha_.end(), [](int a) { return a == 1; });
}

ParikhVector& ParikhVector::operator+=(const ParikhVector& o) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

ParikhVector& ParikhVector::operator-=(const ParikhVector& o) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] -= o.counts[i];
  return *this;
}

std::string to_string(const ParikhVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + ")";
}

Word substitution_image(const Substitution& subst, int letter) {
  if (letter < 0 || letter >= subst.m()) {
    throw InvalidLetter("letter " + std::to_string(letter) + " outside alphabet of size " +
                        std::to_string(subst.m()));
  }
  Word img(static_cast<std::size_t>(subst.alpha()[letter]), Letter{0});
  if (letter + 1 < subst.m()) img.push_back(static_cast<Letter>(letter + 1));
  return img;
}

Word apply_substitution(const Substitution& subst, std::span<const Letter> w) {
  const int m = subst.m();
  Word out;
  out.reserve(w.size() * 2);
  for (Letter x : w) {
    if (x >= m) {
      throw InvalidLetter("letter " + std::to_string(x) + " outside alphabet of size " + std::to_string(m));
    }
    out.insert(out.end(), static_cast<std::size_t>(subst.alpha()[x]), Letter{0});
    if (x + 1 < m) out.push_back(static_cast<Letter>(x + 1));
  }
  return out;
}

Word iterate_image(const Substitution& subst, int letter, int k) {
  Word w = substitution_image(subst, letter);
  if (k == 0) return Word{static_cast<Letter>(letter)};
  for (int i = 1; i < k; ++i) w = apply_substitution(subst, w);
  return w;
}

Word fixed_point_prefix(const Substitution& subst, std::size_t length) {
  Word w{0};
  while (w.size() < length) w = apply_substitution(subst, w);
  w.resize(length);
  return w;
}

std::vector<std::uint64_t> lengths_u(const Substitution& subst, int k) {
  if (k < 0) throw DomainError("lengths_u needs k >= 0");
  const int m = subst.m();
  // len[l] = |phi^j(l)|; |phi^{j+1}(l)| = alpha_l * |phi^j(0)| + |phi^j(l+1)|.
  std::vector<std::uint64_t> len(static_cast<std::size_t>(m), 1);
  std::vector<std::uint64_t> out{1};
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  for (int j = 1; j <= k; ++j) {
    std::vector<std::uint64_t> next(len.size());
    for (int l = 0; l < m; ++l) {
      const auto a = static_cast<std::uint64_t>(subst.alpha()[l]);
      if (a != 0 && len[0] > kMax / a) throw DomainError("U_j overflows 64 bits");
      std::uint64_t v = a * len[0];
      if (l + 1 < m) {
        if (v > kMax - len[l + 1]) throw DomainError("U_j overflows 64 bits");
        v += len[l + 1];
      }
      next[l] = v;
    }
    len = std::move(next);
    out.push_back(len[0]);
  }
  return out;
}

ParikhVector parikh(std::span<const Letter> w, int m) {
  ParikhVector v(m);
  for (Letter x : w) {
    if (x >= m) throw InvalidLetter("letter " + std::to_string(x) + " outside alphabet of size " + std::to_string(m));
    ++v[x];
  }
  return v;
}

std::string to_string(std::span<const Letter> w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s += x < 10 ? static_cast<char>('0' + x) : static_cast<char>('a' + x - 10);
  return s;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      w.push_back(static_cast<Letter>(c - '0'));
    } else if (c >= 'a' && c <= 'f') {
      w.push_back(static_cast<Letter>(c - 'a' + 10));
    } else {
      throw InvalidLetter(std::string("not a letter: '") + c + "'");
    }
  }
  return w;
}

}  // namespace abac
