#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "abac/automaton_types.hpp"
#include "abac/closure.hpp"
#include "abac/numeration.hpp"
#include "abac/word.hpp"

namespace abac {

/// State reached from the initial state after reading `digits` left to right.
int run(const Dfao& a, const DigitString& digits);
int run(const Dfa& a, const DigitString& digits);

/// Initial state followed by every visited state.
std::vector<int> trace(const Dfao& a, const DigitString& digits);

/// Output of the state reached by the normal representation of n >= 1.
int evaluate_ac(const Dfao& a, const Substitution& subst, std::int64_t n);

/// Moore partition refinement. Unreachable states are dropped first, the
/// initial partition is by output value, and classes are numbered by their
/// smallest original state id (so the initial state stays 0).
Dfao minimize_dfao(const Dfao& a);

/// Repeatedly merges non-initial states that share their output and all
/// successors. Cheaper than minimize_dfao and not always minimal.
Dfao reduce_dfao(const Dfao& a);

/// DFA accepting exactly the strings that drive `a` to a state with output c.
Dfa value_acceptor(const Dfao& a, int c);

/// Minimal DFA for the same language (same numbering convention as minimize_dfao).
Dfa minimize_dfa(const Dfa& a);

/// Outputs of states reachable by a string containing a nonzero digit. With
/// `normal_only`, only strings that are normal representations count.
std::set<int> output_range(const Dfao& a, const Substitution& subst, bool normal_only);

/// head . cycle^j . tail for every j >= min_repetitions.
struct FamilyPattern {
  DigitString head;
  DigitString cycle;
  DigitString tail;
  int min_repetitions = 0;

  DigitString instance(int j) const;
};

/// True iff every member of the family is mapped to `expected`. Decided by
/// detecting the lasso of states at cycle boundaries.
bool verify_family(const Dfao& a, const FamilyPattern& pattern, int expected);

/// Max |coordinate| of v_i - v_j over v_i, v_j in the same per-state vect union.
int balance_bound(const ClosureTables& tables);

/// Relabeling by breadth-first search from the initial state, digits ascending.
/// Two minimal automata are isomorphic iff their canonical forms are equal.
Dfa canonical_form(const Dfa& a);
Dfao canonical_form(const Dfao& a);
bool isomorphic(const Dfa& a, const Dfa& b);

/// Accepted strings whose first digit is nonzero, or nullopt if there are
/// infinitely many. Ordered by length then lexicographically.
std::optional<std::vector<DigitString>> finite_language(const Dfa& a);

}  // namespace abac
