// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../common/fixtures.hpp"
#include "../common/tribonacci_reference.hpp"
#include "abac/oracle.hpp"

using namespace abac;
using namespace abac::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects failed expectations without stopping at the first one.
class Check {
 public:
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok_ = false;
      if (failures_++ < 5) detail_ << (detail_.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) { notes_ << (notes_.tellp() > 0 ? "; " : "") << s; }
  Outcome done() const {
    std::string d = ok_ ? notes_.str() : detail_.str();
    if (!ok_ && failures_ > 5) d += "; ... " + std::to_string(failures_ - 5) + " more";
    return {ok_, d};
  }

 private:
  bool ok_ = true;
  int failures_ = 0;
  std::ostringstream detail_;
  std::ostringstream notes_;
};

std::string join(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

int output_of(const Dfao& a, const DigitString& d) { return a.outputs[static_cast<std::size_t>(run(a, d))]; }

int failed = 0;

void criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds) {
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + std::string("time limit exceeded");
  }
  if (!o.ok) ++failed;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << timing << ")";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
}

}  // namespace

int main() {
  criterion(1, "tribonacci closure: 56 pairs, 277 Z-sets, 278-state DFAO", 10, [] {
    Check c;
    const auto& b = tribonacci();
    c.expect(b.tables.catalog.size() == 56, "pairs=" + std::to_string(b.tables.catalog.size()));
    c.expect(b.tables.state_count() == 277, "zsets=" + std::to_string(b.tables.state_count()));
    c.expect(b.dfao.state_count() == 278, "states=" + std::to_string(b.dfao.state_count()));
    return c.done();
  });

  criterion(2, "tribonacci DFAO minimizes to 68 states; second pass is a no-op", 5, [] {
    Check c;
    const auto& b = tribonacci();
    const Dfao once = minimize_dfao(b.dfao);
    const Dfao twice = minimize_dfao(once);
    c.expect(once.state_count() == 68, "minimal=" + std::to_string(once.state_count()));
    c.expect(twice == once, "second pass changed the automaton");
    return c.done();
  });

  criterion(3, "tribonacci output range over states 1..277 is {3,...,7}", 0, [] {
    Check c;
    const auto& t = tribonacci().tables;
    const std::set<int> taus(t.tau.begin(), t.tau.end());
    c.expect(taus == std::set<int>{3, 4, 5, 6, 7}, "tau range " + join(taus));
    for (int q = 1; q <= t.state_count(); ++q) c.expect(output_value(t, q) == t.tau[static_cast<std::size_t>(q - 1)], "tau mismatch");
    return c.done();
  });

  criterion(4, "rho(2013)=4 via states 32 (unreduced) and 10 (reduced); rho(1)=3", 0, [] {
    Check c;
    const auto& b = tribonacci();
    const DigitString rep = greedy_representation(b.subst, 2013);
    c.expect(rep.str() == "1001000101011", "rep=" + rep.str());
    c.expect(trace(b.dfao, rep).back() == 32, "unreduced end " + std::to_string(trace(b.dfao, rep).back()));
    c.expect(trace(b.minimal, rep) == std::vector<int>{0, 1, 2, 4, 9, 13, 4, 3, 3, 5, 6, 8, 6, 10}, "reduced trace");
    c.expect(evaluate_ac(b.dfao, b.subst, 2013) == 4, "rho(2013)");
    c.expect(evaluate_ac(b.minimal, b.subst, 2013) == 4, "reduced rho(2013)");
    c.expect(evaluate_ac(b.dfao, b.subst, 1) == 3, "rho(1)");
    return c.done();
  });

  criterion(5, "reference tables: pairs 1-12, Z 1-12, delta q<=10, tau q<=42, milestones", 0, [] {
    Check c;
    const auto& t = tribonacci().tables;
    for (const auto& row : tribonacci_ref::kPairs) {
      if (row.id > 12) continue;
      const FactorPair expect{parse_word(row.top), parse_word(row.bottom)};
      c.expect(t.catalog.at(static_cast<PairId>(row.id)) == expect, "pair " + std::to_string(row.id));
    }
    for (const auto& [q, ids] : tribonacci_ref::kZSets) {
      if (q > 12) continue;
      c.expect(std::vector<int>(t.zset(q).ids.begin(), t.zset(q).ids.end()) == ids, "Z_" + std::to_string(q));
    }
    for (int q = 1; q <= 10; ++q)
      for (int d = 0; d <= 1; ++d)
        c.expect(t.delta[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(d)] ==
                     tribonacci_ref::kDelta[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(d)],
                 "delta(" + std::to_string(q) + "," + std::to_string(d) + ")");
    for (int q = 1; q <= 42; ++q)
      c.expect(t.tau[static_cast<std::size_t>(q - 1)] == tribonacci_ref::kTau[static_cast<std::size_t>(q - 1)], "tau(" + std::to_string(q) + ")");
    const auto& p = t.progress;
    c.expect(p.size() == 23, "iterations=" + std::to_string(p.size()));
    if (p.size() == 23) {
      c.expect(p[15].first_new_pair == 56 && p[15].last_new_pair == 56, "pair 56 at k=15");
      c.expect(p[16].first_new_pair > p[16].last_new_pair, "new pairs at k=16");
      c.expect(p[21].last_new_state == 277, "Z_277 at k=21");
      c.expect(p[22].first_new_state > p[22].last_new_state, "new states at k=22");
    }
    c.note("digit-major sweep");
    return c.done();
  });

  criterion(6, "tribonacci automaton agrees with the window oracle for n<=2000", 60, [] {
    Check c;
    const auto& b = tribonacci();
    for (std::int64_t n = 1; n <= 2000; ++n) {
      const int got = evaluate_ac(b.dfao, b.subst, n);
      const int expect = static_cast<int>(brute_force_parikh_set(b.subst, n).size());
      c.expect(got == expect, "n=" + std::to_string(n) + " automaton=" + std::to_string(got) + " oracle=" + std::to_string(expect));
    }
    return c.done();
  });

  criterion(7, "tribonacci acceptors: sizes 5,66,66,66,66; A_3 matches the known 5-state DFA; (100)^w prefixes", 0, [] {
    Check c;
    const auto& b = tribonacci();
    const int expect[] = {5, 66, 66, 66, 66};
    for (int v = 3; v <= 7; ++v) {
      const int size = minimize_dfa(value_acceptor(b.dfao, v)).state_count();
      c.expect(size == expect[v - 3], "A_" + std::to_string(v) + " has " + std::to_string(size));
    }
    Dfa known;
    known.alpha = {1, 1, 1};
    known.max_digit = 1;
    known.transitions = {0, 1, 2, 3, 4, 3, 3, 3, 3, 1};
    known.accepting = {0, 1, 1, 0, 1};
    const Dfa a3 = minimize_dfa(value_acceptor(b.dfao, 3));
    c.expect(isomorphic(a3, known), "A_3 not isomorphic to the known DFA");
    for (std::int64_t n = 1; n <= 100000; ++n) {
      const DigitString rep = greedy_representation(b.subst, n);
      const bool three = output_of(b.minimal, rep) == 3;
      c.expect(three == is_prefix_of_power(rep, "100"), "n=" + std::to_string(n));
    }
    return c.done();
  });

  criterion(8, "tribonacci balance bound 2, equal to the oracle over n<=500", 0, [] {
    Check c;
    const int bound = balance_bound(tribonacci().tables);
    const int oracle = brute_force_balance(tribonacci().subst, 500);
    c.expect(bound == 2, "bound=" + std::to_string(bound));
    c.expect(oracle == bound, "oracle=" + std::to_string(oracle));
    return c.done();
  });

  criterion(9, "4-bonacci: 66881-state DFAO; row-merging reduction gives 5665", 300, [] {
    Check c;
    const auto& b = tetranacci();
    c.expect(b.dfao.state_count() == 66881, "states=" + std::to_string(b.dfao.state_count()));
    const Dfao reduced = reduce_dfao(b.dfao);
    c.expect(reduced.state_count() == 5665, "pairwise merge=" + std::to_string(reduced.state_count()));
    c.expect(canonical_form(minimize_dfao(reduced)) == canonical_form(b.minimal), "reduction changed behavior");
    c.note("pairwise merge of identical rows gives " + std::to_string(reduced.state_count()) +
           "; Moore minimum is " + std::to_string(b.minimal.state_count()));
    return c.done();
  });

  criterion(10, "4-bonacci range {4,6..16}; rho=4 iff prefix of (1000)^w; rho=6 iff n in {3,6,12}", 0, [] {
    Check c;
    const auto& b = tetranacci();
    const std::set<int> range = output_range(b.minimal, b.subst, true);
    std::set<int> expect{4};
    for (int v = 6; v <= 16; ++v) expect.insert(v);
    c.expect(range == expect, "range=" + join(range));
    for (std::int64_t n = 1; n <= 100000; ++n) {
      const DigitString rep = greedy_representation(b.subst, n);
      const int rho = output_of(b.minimal, rep);
      c.expect((rho == 4) == is_prefix_of_power(rep, "1000"), "rho=4 at n=" + std::to_string(n));
      if (n <= 10000) c.expect((rho == 6) == (n == 3 || n == 6 || n == 12), "rho=6 at n=" + std::to_string(n));
    }
    const auto lang = finite_language(minimize_dfa(value_acceptor(b.minimal, 6)));
    c.expect(lang.has_value(), "A_6 language is infinite");
    if (lang) {
      std::set<std::uint64_t> values;
      for (const auto& d : *lang) values.insert(value_of(b.subst, d));
      c.expect(lang->size() == 3 && values == std::set<std::uint64_t>{3, 6, 12}, "A_6 language mismatch");
    }
    return c.done();
  });

  criterion(11, "4-bonacci acceptor sizes 6,6,66,4649,...,5032", 0, [] {
    Check c;
    const std::vector<std::pair<int, int>> table = {{4, 6},     {6, 6},     {7, 66},    {8, 4649},  {9, 4683},  {10, 4735},
                                                    {11, 5004}, {12, 5256}, {13, 5299}, {14, 5322}, {15, 5324}, {16, 5032}};
    const auto& b = tetranacci();
    for (const auto& [v, size] : table) {
      const int got = minimize_dfa(value_acceptor(b.dfao, v)).state_count();
      c.expect(got == size, "A_" + std::to_string(v) + " has " + std::to_string(got));
    }
    return c.done();
  });

  criterion(12, "4-bonacci infinite families verified by lasso and by direct runs j<=60", 0, [] {
    Check c;
    struct Row {
      int value;
      const char* head;
      const char* cycle;
      const char* tail;
      int min;
    };
    const Row rows[] = {{7, "", "1000", "0", 1},  {8, "", "100", "", 3},      {9, "", "10", "", 11},
                        {10, "1", "0", "11", 19}, {11, "", "10", "0", 11},    {12, "1", "0", "1", 19},
                        {13, "1", "0", "", 19},   {14, "", "10000", "", 6},   {15, "", "10000", "0", 6},
                        {16, "", "10000", "00", 6}};
    const auto& b = tetranacci();
    const AdmissibilityAutomaton adm(b.subst);
    int oracle_checked = 0;
    for (const auto& r : rows) {
      const FamilyPattern p{digits(r.head), digits(r.cycle), digits(r.tail), r.min};
      const std::string name = std::string(r.head) + "(" + r.cycle + ")^j" + r.tail;
      c.expect(verify_family(b.dfao, p, r.value), name + " lasso");
      c.expect(verify_family(b.minimal, p, r.value), name + " lasso (minimal)");
      for (int j = r.min; j <= 60; ++j) {
        const DigitString d = p.instance(j);
        c.expect(adm.accepts(d), name + " not normal at j=" + std::to_string(j));
        c.expect(output_of(b.dfao, d) == r.value, name + " j=" + std::to_string(j));
        if (d.size() <= 16) {
          const auto n = static_cast<std::int64_t>(value_of(b.subst, d));
          if (n <= 20000) {
            ++oracle_checked;
            c.expect(static_cast<int>(brute_force_parikh_set(b.subst, n).size()) == r.value, name + " oracle n=" + std::to_string(n));
          }
        }
      }
    }
    c.note(std::to_string(oracle_checked) + " small members also checked against the oracle");
    return c.done();
  });

  criterion(13, "4-bonacci balance bound 3; oracle over n<=500 within it; bound attained", 0, [] {
    Check c;
    const auto& b = tetranacci();
    const int bound = balance_bound(b.tables);
    const int oracle = brute_force_balance(b.subst, 500);
    c.expect(bound == 3, "bound=" + std::to_string(bound));
    c.expect(oracle <= bound, "oracle=" + std::to_string(oracle));
    // First window length with a spread of 3.
    const auto set = brute_force_parikh_set(b.subst, 3305);
    int spread = 0;
    for (std::size_t l = 0; l < 4; ++l) {
      int lo = set.front()[l], hi = lo;
      for (const auto& v : set) lo = std::min(lo, v[l]), hi = std::max(hi, v[l]);
      spread = std::max(spread, hi - lo);
    }
    c.expect(spread == 3, "spread at n=3305 is " + std::to_string(spread));
    c.note("oracle max over n<=500 is " + std::to_string(oracle) + "; spread 3 first occurs at n=3305");
    return c.done();
  });

  criterion(14, "property suite", 0, [] {
    Check c;
    const auto& b = tribonacci();
    const auto& s = b.subst;
    // Co-decomposition reconstruction and maximality.
    const Word u = fixed_point_prefix(s, 3000);
    int checked = 0;
    for (std::size_t shift = 1; shift < 2000; shift += 7) {
      for (std::size_t L = 1; L <= 40; ++L) {
        const std::span<const Letter> v(u.data(), L), w(u.data() + shift, L);
        if (parikh(v, 3) != parikh(w, 3)) continue;
        ++checked;
        Word top, bottom;
        for (const auto& blk : codecompose(v, w, false)) {
          top.insert(top.end(), blk.top.begin(), blk.top.end());
          bottom.insert(bottom.end(), blk.bottom.begin(), blk.bottom.end());
          for (std::size_t i = 1; i < blk.top.size(); ++i)
            c.expect(parikh(std::span(blk.top).first(i), 3) != parikh(std::span(blk.bottom).first(i), 3), "block not maximal");
        }
        c.expect(top == Word(v.begin(), v.end()) && bottom == Word(w.begin(), w.end()), "reconstruction");
      }
    }
    c.expect(checked > 100, "too few co-decompositions checked");
    // Transformation formula and the relative-Parikh identity.
    for (std::int64_t n = 1; n <= 300; ++n) {
      const auto zn = base_decomposition(s, n, false);
      for (int d = 0; d <= 1; ++d) {
        DigitString rep = greedy_representation(s, n);
        rep.digits.push_back(static_cast<Digit>(d));
        if (!is_normal(s, rep)) continue;
        std::set<FactorPair> image;
        for (const auto& p : zn)
          for (const auto& q : digit_image(s, d, p, false)) image.insert(q);
        const auto direct = base_decomposition(s, static_cast<std::int64_t>(value_of(s, rep)), false);
        c.expect(image == std::set<FactorPair>(direct.begin(), direct.end()), "transformation formula n=" + std::to_string(n));
      }
      std::set<ParikhVector> uni;
      for (const auto& p : zn)
        for (const auto& v : vect(p, 3)) uni.insert(v);
      const auto rel = brute_force_rel_set(s, n);
      c.expect(uni == std::set<ParikhVector>(rel.begin(), rel.end()), "relative Parikh n=" + std::to_string(n));
    }
    // Minimization preserves behavior.
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> bit(0, 1), len(0, 40);
    for (int i = 0; i < 10000; ++i) {
      DigitString d;
      const int L = len(rng);
      for (int k = 0; k < L; ++k) d.digits.push_back(static_cast<Digit>(bit(rng)));
      c.expect(output_of(b.dfao, d) == output_of(b.minimal, d), "minimized output differs on " + d.str());
    }
    // Numeration round trip.
    for (std::int64_t n = 0; n <= 100000; ++n)
      c.expect(value_of(s, greedy_representation(s, n)) == static_cast<std::uint64_t>(n), "round trip n=" + std::to_string(n));
    // m = 2.
    const auto& f = built(2);
    c.expect(output_range(f.dfao, f.subst, false) == std::set<int>{2}, "m=2 range");
    for (std::int64_t n = 1; n <= 1000; ++n) c.expect(evaluate_ac(f.dfao, f.subst, n) == 2, "m=2 rho");
    c.expect(balance_bound(f.tables) == 1, "m=2 balance");
    return c.done();
  });

  criterion(15, "minimal value m is attained on prefixes of (10^(m-1))^w, m=2,3,4, n<=10^4 (empirical)", 0, [] {
    Check c;
    int hits = 0;
    for (int m = 2; m <= 4; ++m) {
      const auto& b = built(m);
      const std::string period = "1" + std::string(static_cast<std::size_t>(m - 1), '0');
      for (std::int64_t n = 1; n <= 10000; ++n) {
        const DigitString rep = greedy_representation(b.subst, n);
        if (!is_prefix_of_power(rep, period)) continue;
        ++hits;
        c.expect(evaluate_ac(b.dfao, b.subst, n) == m, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        c.expect(static_cast<int>(brute_force_parikh_set(b.subst, n).size()) == m, "oracle m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
    c.note(std::to_string(hits) + " values of n checked; not a proof");
    return c.done();
  });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
