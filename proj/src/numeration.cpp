#include "abac/numeration.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "abac/error.hpp"

namespace abac {

DigitString DigitString::parse(std::string_view text) {
  DigitString d;
  d.digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError(std::string("not a digit: '") + c + "'");
    d.digits.push_back(static_cast<Digit>(c - '0'));
  }
  return d;
}

std::string DigitString::str() const {
  std::string s;
  s.reserve(digits.size());
  for (Digit x : digits) s += static_cast<char>('0' + x);
  return s;
}

DigitString strip_leading_zeros(DigitString d) {
  auto it = std::find_if(d.digits.begin(), d.digits.end(), [](Digit x) { return x != 0; });
  d.digits.erase(d.digits.begin(), it);
  return d;
}

namespace {

// Smallest list U_0..U_K with U_K > n (or up to overflow).
std::vector<std::uint64_t> weights_above(const Substitution& subst, std::uint64_t n) {
  std::vector<std::uint64_t> u{1};
  int k = 0;
  while (u.back() <= n) {
    ++k;
    try {
      u = lengths_u(subst, k);
    } catch (const DomainError&) {
      break;
    }
  }
  return u;
}

}  // namespace

DigitString greedy_representation(const Substitution& subst, std::int64_t n) {
  if (n < 0) throw DomainError("greedy_representation needs n >= 0, got " + std::to_string(n));
  DigitString out;
  if (n == 0) return out;
  auto rest = static_cast<std::uint64_t>(n);
  const auto u = weights_above(subst, rest);
  std::size_t top = u.size() - 1;
  while (u[top] > rest) --top;
  for (std::size_t j = top + 1; j-- > 0;) {
    const std::uint64_t d = rest / u[j];
    rest -= d * u[j];
    out.digits.push_back(static_cast<Digit>(d));
  }
  return out;
}

std::uint64_t value_of(const Substitution& subst, const DigitString& digits) {
  const DigitString d = strip_leading_zeros(digits);
  for (Digit x : digits.digits) {
    if (x > subst.alpha0()) throw DomainError("digit " + std::to_string(x) + " exceeds alpha_0");
  }
  if (d.empty()) return 0;
  const auto u = lengths_u(subst, static_cast<int>(d.size()) - 1);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const std::uint64_t w = u[d.size() - 1 - i];
    const std::uint64_t x = d.digits[i];
    if (x != 0 && w > (kMax - v) / x) throw DomainError("value overflows 64 bits");
    v += x * w;
  }
  return v;
}

bool is_normal(const Substitution& subst, const DigitString& digits) {
  const DigitString d = strip_leading_zeros(digits);
  const std::uint64_t v = value_of(subst, d);
  if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("value too large for the greedy round trip");
  }
  return greedy_representation(subst, static_cast<std::int64_t>(v)) == d;
}

AdmissibilityAutomaton::AdmissibilityAutomaton(const Substitution& subst) : max_digit_(subst.alpha0()) {
  const int m = subst.m();
  // One period of the quasi-greedy expansion of 1.
  std::vector<int> period = subst.alpha();
  period.back() -= 1;

  std::map<std::uint32_t, int> index{{0u, 0}};
  std::vector<std::uint32_t> masks{0u};
  for (std::size_t s = 0; s < masks.size(); ++s) {
    std::vector<int> row(static_cast<std::size_t>(max_digit_ + 1), kReject);
    for (int e = 0; e <= max_digit_; ++e) {
      const std::uint32_t active = masks[s] | 1u;  // the suffix starting at e
      std::uint32_t out = 0;
      bool reject = false;
      for (int off = 0; off < m && !reject; ++off) {
        if (!(active & (1u << off))) continue;
        if (e > period[static_cast<std::size_t>(off)]) reject = true;
        else if (e == period[static_cast<std::size_t>(off)]) out |= 1u << ((off + 1) % m);
      }
      if (reject) continue;
      auto [it, fresh] = index.emplace(out, static_cast<int>(masks.size()));
      if (fresh) masks.push_back(out);
      row[static_cast<std::size_t>(e)] = it->second;
    }
    next_.push_back(std::move(row));
  }

  // Normal strings of length L (leading zeros allowed) are exactly 0..U_L - 1.
  constexpr int kCheckLength = 40;
  std::vector<std::uint64_t> count(next_.size(), 0);
  count[0] = 1;
  for (int len = 1; len <= kCheckLength; ++len) {
    std::vector<std::uint64_t> nc(next_.size(), 0);
    for (std::size_t s = 0; s < next_.size(); ++s) {
      for (int t : next_[s]) {
        if (t != kReject) nc[static_cast<std::size_t>(t)] += count[s];
      }
    }
    count = std::move(nc);
    std::uint64_t total = 0;
    for (auto c : count) total += c;
    std::vector<std::uint64_t> u;
    try {
      u = lengths_u(subst, len);
    } catch (const DomainError&) {
      break;
    }
    if (total != u.back()) {
      throw DomainError("exponent list does not define a Parry-admissible numeration system");
    }
  }
}

bool AdmissibilityAutomaton::accepts(const DigitString& d) const {
  int s = start();
  for (Digit x : d.digits) {
    if (x > max_digit_) return false;
    s = next(s, x);
    if (s == kReject) return false;
  }
  return true;
}

}  // namespace abac
