#include "abac/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "abac/error.hpp"

namespace abac {

namespace {

// Collects window Parikh vectors relative to Psi(u[n]), packed 7 bits per letter.
class WindowSet {
 public:
  WindowSet(const Word& prefix, std::size_t n, int m)
      : n_(n), m_(m), packable_(m <= 9), base_(parikh(std::span(prefix).first(n), m)), counts_(base_) {}

  // Adds every window starting at positions [next_start_, last_start].
  void extend(const Word& prefix, std::size_t last_start) {
    for (; next_start_ <= last_start; ++next_start_) {
      if (next_start_ > 0) {
        --counts_[prefix[next_start_ - 1]];
        ++counts_[prefix[next_start_ + n_ - 1]];
      }
      add_current();
    }
  }

  std::vector<ParikhVector> vectors() const {
    std::vector<ParikhVector> out(slow_.begin(), slow_.end());
    for (std::uint64_t key : packed_) {
      ParikhVector v(m_);
      for (int l = 0; l < m_; ++l) v[static_cast<std::size_t>(l)] = static_cast<std::int32_t>((key >> (7 * l)) & 0x7f) - 64 + base_[static_cast<std::size_t>(l)];
      out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  void add_current() {
    if (packable_) {
      std::uint64_t key = 0;
      bool ok = true;
      for (int l = 0; l < m_ && ok; ++l) {
        const int rel = counts_[static_cast<std::size_t>(l)] - base_[static_cast<std::size_t>(l)];
        ok = rel > -64 && rel < 64;
        key |= static_cast<std::uint64_t>(rel + 64) << (7 * l);
      }
      if (ok) {
        packed_.insert(key);
        return;
      }
    }
    slow_.insert(counts_);
  }

  std::size_t n_;
  int m_;
  bool packable_;
  ParikhVector base_;
  ParikhVector counts_;
  std::size_t next_start_ = 0;
  std::unordered_set<std::uint64_t> packed_;
  std::set<ParikhVector> slow_;
};

}  // namespace

WindowScan scan_prefix(const Substitution& subst, std::int64_t n, std::size_t prefix_length) {
  if (n < 1) throw DomainError("window length must be >= 1, got " + std::to_string(n));
  const auto len = static_cast<std::size_t>(n);
  if (prefix_length < len) throw DomainError("prefix shorter than the window");
  const Word prefix = fixed_point_prefix(subst, prefix_length);
  WindowSet set(prefix, len, subst.m());
  set.extend(prefix, prefix_length - len);
  return {prefix_length, n, set.vectors()};
}

constexpr std::size_t kMinPrefix = 4096;
constexpr int kStableDoublings = 2;

WindowScan brute_force_scan(const Substitution& subst, std::int64_t n) {
  if (n < 1) throw DomainError("window length must be >= 1, got " + std::to_string(n));
  const auto len = static_cast<std::size_t>(n);
  // A single unchanged doubling is not enough for every simple Parry word
  // (alpha = 3,2,1 at n = 170 gains a vector after 2720 letters).
  std::size_t length = std::max<std::size_t>(8 * len, kMinPrefix);
  Word prefix = fixed_point_prefix(subst, 2 * length);
  WindowSet set(prefix, len, subst.m());
  set.extend(prefix, length - len);
  std::vector<ParikhVector> previous = set.vectors();
  int stable = 0;
  while (true) {
    length *= 2;
    if (prefix.size() < length) prefix = fixed_point_prefix(subst, length);
    set.extend(prefix, length - len);
    std::vector<ParikhVector> current = set.vectors();
    if (current == previous) {
      if (++stable == kStableDoublings) return {length, n, std::move(current)};
    } else {
      stable = 0;
      previous = std::move(current);
    }
  }
}

std::vector<ParikhVector> brute_force_parikh_set(const Substitution& subst, std::int64_t n) {
  return brute_force_scan(subst, n).vectors;
}

std::vector<ParikhVector> brute_force_rel_set(const Substitution& subst, std::int64_t n) {
  const ParikhVector base = parikh(fixed_point_prefix(subst, static_cast<std::size_t>(n)), subst.m());
  std::vector<ParikhVector> out = brute_force_parikh_set(subst, n);
  for (auto& v : out) v -= base;
  std::sort(out.begin(), out.end());
  return out;
}

int brute_force_balance(const Substitution& subst, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  int bound = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto set = brute_force_parikh_set(subst, n);
    for (int l = 0; l < subst.m(); ++l) {
      const auto [lo, hi] = std::minmax_element(set.begin(), set.end(), [l](const ParikhVector& a, const ParikhVector& b) {
        return a[static_cast<std::size_t>(l)] < b[static_cast<std::size_t>(l)];
      });
      bound = std::max(bound, (*hi)[static_cast<std::size_t>(l)] - (*lo)[static_cast<std::size_t>(l)]);
    }
  }
  return bound;
}

}  // namespace abac
