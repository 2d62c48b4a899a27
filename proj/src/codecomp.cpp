#include "abac/codecomp.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "abac/error.hpp"

namespace abac {

std::string to_string(const FactorPair& p) { return "(" + to_string(p.top) + "/" + to_string(p.bottom) + ")"; }

std::size_t FactorPairHash::operator()(const FactorPair& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t x) { h = (h ^ x) * 1099511628211ull; };
  for (Letter x : p.top) mix(x);
  mix(0xff);
  for (Letter x : p.bottom) mix(x);
  return h;
}

std::size_t ZSetHash::operator()(const ZSet& z) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (PairId id : z.ids) h = (h ^ id) * 1099511628211ull;
  return h;
}

PairId PairCatalog::intern(const FactorPair& p) {
  auto [it, fresh] = ids_.emplace(p, static_cast<PairId>(pairs_.size() + 1));
  if (fresh) pairs_.push_back(p);
  return it->second;
}

PairId PairCatalog::find(const FactorPair& p) const {
  auto it = ids_.find(p);
  return it == ids_.end() ? 0 : it->second;
}

const FactorPair& PairCatalog::at(PairId id) const {
  if (id == 0 || id > pairs_.size()) throw DomainError("no factor pair with id " + std::to_string(id));
  return pairs_[id - 1];
}

std::vector<FactorPair> codecompose(std::span<const Letter> v, std::span<const Letter> w, bool refined) {
  if (v.empty() || w.empty()) throw PreconditionError("codecompose needs nonempty words");
  if (v.size() != w.size()) throw PreconditionError("codecompose needs words of equal length");
  std::array<int, 256> diff{};
  int nonzero = 0;
  auto bump = [&](Letter x, int by) {
    const int before = diff[x];
    diff[x] += by;
    nonzero += (diff[x] != 0) - (before != 0);
  };
  std::vector<FactorPair> blocks;
  std::size_t start = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    bump(v[i], +1);
    bump(w[i], -1);
    const std::size_t cut = i + 1;
    if (nonzero == 0 && cut < v.size() && (!refined || w[cut] == 0)) {
      blocks.push_back({Word(v.begin() + start, v.begin() + cut), Word(w.begin() + start, w.begin() + cut)});
      start = cut;
    }
  }
  if (nonzero != 0) throw PreconditionError("codecompose needs abelian-equivalent words");
  blocks.push_back({Word(v.begin() + start, v.end()), Word(w.begin() + start, w.end())});
  return blocks;
}

std::vector<ParikhVector> vect(const FactorPair& p, int m) {
  if (p.top.size() != p.bottom.size()) throw PreconditionError("vect needs a pair of equal-length words");
  std::vector<ParikhVector> out;
  ParikhVector d(m);
  for (std::size_t i = 0; i < p.top.size(); ++i) {
    --d[p.top[i]];
    ++d[p.bottom[i]];
    out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int compute_r(const Substitution& subst) {
  const int m = subst.m();
  // First letter of phi^j(l) evolves by first(phi(x)); once 0 it stays 0.
  auto first_of_image = [&](int x) { return subst.alpha()[x] > 0 ? 0 : x + 1; };
  int steps = 1;
  for (int l = 0; l < m; ++l) {
    int x = first_of_image(l);
    int j = 1;
    while (x != 0) {
      x = first_of_image(x);
      ++j;
    }
    steps = std::max(steps, j);
  }
  return m - 1 + steps;
}

namespace {

std::vector<FactorPair> as_sorted_set(std::vector<FactorPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

ZSet register_all(const std::vector<FactorPair>& pairs, PairCatalog& catalog) {
  ZSet z;
  z.ids.reserve(pairs.size());
  for (const auto& p : pairs) z.ids.push_back(catalog.intern(p));
  std::sort(z.ids.begin(), z.ids.end());
  return z;
}

}  // namespace

std::vector<FactorPair> base_decomposition(const Substitution& subst, std::int64_t n, bool refined) {
  if (n < 1) throw DomainError("Z(n) is defined for n >= 1, got " + std::to_string(n));
  int k = 0;
  while (lengths_u(subst, k).back() < static_cast<std::uint64_t>(n)) ++k;
  const int r = compute_r(subst);
  const auto u = lengths_u(subst, k + r);
  const Word v = fixed_point_prefix(subst, static_cast<std::size_t>(u.back()));
  const auto len = static_cast<std::size_t>(n);
  Word w(v.begin() + static_cast<std::ptrdiff_t>(len), v.end());
  w.insert(w.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
  return as_sorted_set(codecompose(v, w, refined));
}

ZSet base_zset(const Substitution& subst, std::int64_t n, bool refined, PairCatalog& catalog) {
  if (n < 1 || n > subst.alpha0()) {
    throw DomainError("base Z-sets are seeded for 1 <= n <= alpha_0, got " + std::to_string(n));
  }
  return register_all(base_decomposition(subst, n, refined), catalog);
}

std::vector<FactorPair> digit_image(const Substitution& subst, int d, const FactorPair& p, bool refined) {
  if (d < 0 || d > subst.alpha0()) throw DomainError("digit " + std::to_string(d) + " outside 0..alpha_0");
  const Word top = apply_substitution(subst, p.top);
  const Word img = apply_substitution(subst, p.bottom);
  const auto shift = static_cast<std::size_t>(d);
  if (img.size() < shift || std::any_of(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(shift),
                                        [](Letter x) { return x != 0; })) {
    throw PreconditionError("phi(" + to_string(p.bottom) + ") does not start with 0^" + std::to_string(d));
  }
  Word bottom(img.begin() + static_cast<std::ptrdiff_t>(shift), img.end());
  bottom.insert(bottom.end(), shift, Letter{0});
  return as_sorted_set(codecompose(top, bottom, refined));
}

ZSet apply_d(const Substitution& subst, int d, const FactorPair& p, bool refined, PairCatalog& catalog) {
  return register_all(digit_image(subst, d, p, refined), catalog);
}

}  // namespace abac
