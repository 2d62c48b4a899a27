#pragma once

// Closures and automata shared by several tests. Built once per process.

#include <map>

#include "abac/automaton.hpp"
#include "abac/closure.hpp"

namespace abac::testing {

struct Built {
  Substitution subst;
  ClosureTables tables;
  Dfao dfao;
  Dfao minimal;
};

inline const Built& built(int m) {
  static std::map<int, Built> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    Substitution s = Substitution::m_bonacci(m);
    ClosureTables t = explore(s);
    Dfao a = build_dfao(t);
    Dfao min = minimize_dfao(a);
    it = cache.emplace(m, Built{s, std::move(t), std::move(a), std::move(min)}).first;
  }
  return it->second;
}

inline const Built& tribonacci() { return built(3); }
inline const Built& tetranacci() { return built(4); }

inline DigitString digits(const char* s) { return DigitString::parse(s); }

// True iff d is a prefix of period^omega.
inline bool is_prefix_of_power(const DigitString& d, const std::string& period) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.digits[i] != static_cast<Digit>(period[i % period.size()] - '0')) return false;
  return true;
}

}  // namespace abac::testing
