#include <doctest.h>

#include <random>
#include <set>

#include "../common/fixtures.hpp"
#include "abac/error.hpp"
#include "abac/oracle.hpp"

using namespace abac;
using namespace abac::testing;

TEST_CASE("parikh sets") {
  const auto t = Substitution::m_bonacci(3);
  CHECK(brute_force_parikh_set(t, 1) ==
        std::vector<ParikhVector>{ParikhVector({0, 0, 1}), ParikhVector({0, 1, 0}), ParikhVector({1, 0, 0})});
  CHECK(brute_force_parikh_set(t, 2013).size() == 4);
  CHECK(brute_force_parikh_set(Substitution::m_bonacci(4), 1).size() == 4);
  CHECK_THROWS_AS(brute_force_parikh_set(t, 0), DomainError);
}

TEST_CASE("relative parikh sets") {
  const auto t = Substitution::m_bonacci(3);
  const auto rel = brute_force_rel_set(t, 1);
  CHECK(std::set<ParikhVector>(rel.begin(), rel.end()) ==
        std::set<ParikhVector>{ParikhVector({0, 0, 0}), ParikhVector({-1, 1, 0}), ParikhVector({-1, 0, 1})});

  std::set<ParikhVector> from_z2;
  for (const auto& p : base_decomposition(t, 2, false))
    for (const auto& v : vect(p, 3)) from_z2.insert(v);
  const auto rel2 = brute_force_rel_set(t, 2);
  CHECK(std::set<ParikhVector>(rel2.begin(), rel2.end()) == from_z2);

  for (std::int64_t n = 1; n <= 200; ++n) {
    const auto abs = brute_force_parikh_set(t, n);
    const auto shifted = brute_force_rel_set(t, n);
    const ParikhVector base = parikh(fixed_point_prefix(t, static_cast<std::size_t>(n)), 3);
    std::set<ParikhVector> expect;
    for (const auto& v : abs) expect.insert(v - base);
    REQUIRE(std::set<ParikhVector>(shifted.begin(), shifted.end()) == expect);
    REQUIRE(expect.count(ParikhVector(3)) == 1);
  }
}

TEST_CASE("balance") {
  CHECK(brute_force_balance(Substitution::m_bonacci(3), 500) == 2);
  CHECK(brute_force_balance(Substitution::m_bonacci(2), 300) == 1);
  // The 4-bonacci word first shows an imbalance of 3 at length 3305.
  CHECK(brute_force_balance(Substitution::m_bonacci(4), 300) == 2);
}

TEST_CASE("stabilization") {
  const auto t = Substitution::m_bonacci(3);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(1, 3000);
  for (int i = 0; i < 20; ++i) {
    const int n = pick(rng);
    const WindowScan s = brute_force_scan(t, n);
    CHECK(scan_prefix(t, n, s.prefix_length * 2).vectors == s.vectors);
  }
}

TEST_CASE("automaton agreement") {
  const auto& b3 = tribonacci();
  for (std::int64_t n = 1; n <= 2000; ++n)
    REQUIRE(evaluate_ac(b3.dfao, b3.subst, n) == static_cast<int>(brute_force_parikh_set(b3.subst, n).size()));
  const auto& b4 = tetranacci();
  for (std::int64_t n = 1; n <= 500; ++n)
    REQUIRE(evaluate_ac(b4.minimal, b4.subst, n) == static_cast<int>(brute_force_parikh_set(b4.subst, n).size()));
}
