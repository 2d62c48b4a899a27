#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <unordered_map>
#include <vector>

#include "abac/word.hpp"

namespace abac {

/// Ordered pair (top over bottom) of abelian-equivalent words.
struct FactorPair {
  Word top;
  Word bottom;

  friend auto operator<=>(const FactorPair&, const FactorPair&) = default;
  friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

std::string to_string(const FactorPair& p);  // "(01/10)"

struct FactorPairHash {
  std::size_t operator()(const FactorPair& p) const noexcept;
};

using PairId = std::uint32_t;

/// Duplicate-free list of factor pairs with dense 1-based ids in discovery order.
class PairCatalog {
 public:
  /// Id of `p`, registering it when new.
  PairId intern(const FactorPair& p);
  /// Id of `p` or 0 when absent.
  PairId find(const FactorPair& p) const;
  const FactorPair& at(PairId id) const;
  std::size_t size() const noexcept { return pairs_.size(); }

 private:
  std::vector<FactorPair> pairs_;
  std::unordered_map<FactorPair, PairId, FactorPairHash> ids_;
};

/// Sorted, duplicate-free list of catalog ids.
struct ZSet {
  std::vector<PairId> ids;

  friend bool operator==(const ZSet&, const ZSet&) = default;
};

struct ZSetHash {
  std::size_t operator()(const ZSet& z) const noexcept;
};

/// Maximal abelian co-decomposition of (v over w).
///
/// Cuts at every interior position where the prefixes of v and w have equal
/// Parikh vectors; with `refined`, only where w continues with the letter 0.
/// Throws PreconditionError if v and w are empty or not abelian-equivalent.
std::vector<FactorPair> codecompose(std::span<const Letter> v, std::span<const Letter> w, bool refined);

/// { Psi(s) - Psi(r) : r, s prefixes of top, bottom of equal length 1..|top| }, sorted.
std::vector<ParikhVector> vect(const FactorPair& p, int m);

/// R = m - 1 + min{ j : phi^j(l) starts with 0 for every letter l }.
int compute_r(const Substitution& subst);

/// Dec(phi^{K+R}(0) over u[n]^-1 phi^{K+R}(0) u[n]) as a sorted set, for any n >= 1.
std::vector<FactorPair> base_decomposition(const Substitution& subst, std::int64_t n, bool refined);

/// base_decomposition for 1 <= n <= alpha_0, registered in `catalog` in sorted order.
ZSet base_zset(const Substitution& subst, std::int64_t n, bool refined, PairCatalog& catalog);

/// D_d(p) = Dec(phi(top) over 0^-d phi(bottom) 0^d) as a sorted set.
/// Throws PreconditionError when phi(bottom) does not start with 0^d.
std::vector<FactorPair> digit_image(const Substitution& subst, int d, const FactorPair& p, bool refined);

/// digit_image registered in `catalog` in sorted order.
ZSet apply_d(const Substitution& subst, int d, const FactorPair& p, bool refined, PairCatalog& catalog);

}  // namespace abac
