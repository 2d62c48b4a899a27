#include "abac/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "abac/error.hpp"

namespace abac {

namespace {

template <class Automaton>
int run_from(const Automaton& a, int q, const DigitString& digits) {
  for (Digit d : digits.digits) {
    if (d > a.max_digit) throw DomainError("digit " + std::to_string(d) + " outside the input alphabet");
    q = a.next(q, d);
  }
  return q;
}

template <class Automaton>
std::vector<int> reachable_states(const Automaton& a) {
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(a.state_count()), 0);
  std::deque<int> queue{a.initial};
  seen[static_cast<std::size_t>(a.initial)] = 1;
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int d = 0; d < a.radix(); ++d) {
      const int to = a.next(q, d);
      if (!seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = 1;
        queue.push_back(to);
      }
    }
  }
  std::vector<int> out;
  for (int q = 0; q < a.state_count(); ++q)
    if (seen[static_cast<std::size_t>(q)]) out.push_back(q);
  return out;
}

// Moore refinement over local states 0..n-1. `next` is row-major with `radix`
// columns. Returns class ids numbered by smallest member.
std::vector<int> moore_classes(int n, int radix, const std::vector<int>& next, const std::vector<int>& color) {
  std::vector<int> cls(static_cast<std::size_t>(n));
  {
    std::map<int, int> ids;
    for (int q = 0; q < n; ++q) cls[static_cast<std::size_t>(q)] = ids.emplace(color[static_cast<std::size_t>(q)], static_cast<int>(ids.size())).first->second;
  }
  int count = 0;
  for (int q = 0; q < n; ++q) count = std::max(count, cls[static_cast<std::size_t>(q)] + 1);

  const auto width = static_cast<std::size_t>(radix + 1);
  std::vector<int> sig(static_cast<std::size_t>(n) * width);
  std::vector<int> order(static_cast<std::size_t>(n));
  while (true) {
    for (int q = 0; q < n; ++q) {
      const auto base = static_cast<std::size_t>(q) * width;
      sig[base] = cls[static_cast<std::size_t>(q)];
      for (int d = 0; d < radix; ++d) {
        sig[base + 1 + static_cast<std::size_t>(d)] = cls[static_cast<std::size_t>(next[static_cast<std::size_t>(q * radix + d)])];
      }
    }
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](int x, int y) {
      return std::lexicographical_compare(sig.begin() + static_cast<std::ptrdiff_t>(x * width),
                                          sig.begin() + static_cast<std::ptrdiff_t>((x + 1) * width),
                                          sig.begin() + static_cast<std::ptrdiff_t>(y * width),
                                          sig.begin() + static_cast<std::ptrdiff_t>((y + 1) * width));
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<int> refined(static_cast<std::size_t>(n));
    int next_count = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && less(order[i - 1], order[i])) ++next_count;
      refined[static_cast<std::size_t>(order[i])] = next_count;
    }
    ++next_count;
    cls = std::move(refined);
    if (next_count == count) break;
    count = next_count;
  }

  std::vector<int> renumber(static_cast<std::size_t>(count), -1);
  int fresh = 0;
  for (int q = 0; q < n; ++q) {
    int& r = renumber[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])];
    if (r < 0) r = fresh++;
    cls[static_cast<std::size_t>(q)] = r;
  }
  return cls;
}

struct Quotient {
  std::vector<int> kept;       // original ids, ascending
  std::vector<int> class_of;   // per kept index
  int classes = 0;
};

template <class Automaton>
Quotient quotient(const Automaton& a, const std::vector<int>& color_by_state) {
  Quotient out;
  out.kept = reachable_states(a);
  const int n = static_cast<int>(out.kept.size());
  std::vector<int> local(static_cast<std::size_t>(a.state_count()), -1);
  for (int i = 0; i < n; ++i) local[static_cast<std::size_t>(out.kept[static_cast<std::size_t>(i)])] = i;
  std::vector<int> next(static_cast<std::size_t>(n * a.radix()));
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int q = out.kept[static_cast<std::size_t>(i)];
    color[static_cast<std::size_t>(i)] = color_by_state[static_cast<std::size_t>(q)];
    for (int d = 0; d < a.radix(); ++d) next[static_cast<std::size_t>(i * a.radix() + d)] = local[static_cast<std::size_t>(a.next(q, d))];
  }
  out.class_of = moore_classes(n, a.radix(), next, color);
  for (int c : out.class_of) out.classes = std::max(out.classes, c + 1);
  return out;
}

template <class Automaton>
std::vector<int> class_transitions(const Automaton& a, const Quotient& qt) {
  std::vector<int> local(static_cast<std::size_t>(a.state_count()), -1);
  for (std::size_t i = 0; i < qt.kept.size(); ++i) local[static_cast<std::size_t>(qt.kept[i])] = static_cast<int>(i);
  std::vector<int> out(static_cast<std::size_t>(qt.classes * a.radix()), -1);
  for (std::size_t i = 0; i < qt.kept.size(); ++i) {
    const int c = qt.class_of[i];
    if (out[static_cast<std::size_t>(c * a.radix())] >= 0) continue;
    for (int d = 0; d < a.radix(); ++d) {
      const int to = local[static_cast<std::size_t>(a.next(qt.kept[i], d))];
      out[static_cast<std::size_t>(c * a.radix() + d)] = qt.class_of[static_cast<std::size_t>(to)];
    }
  }
  return out;
}

template <class Automaton>
int initial_class(const Automaton& a, const Quotient& qt) {
  const auto it = std::lower_bound(qt.kept.begin(), qt.kept.end(), a.initial);
  return qt.class_of[static_cast<std::size_t>(it - qt.kept.begin())];
}

template <class Automaton>
std::vector<int> bfs_relabel(const Automaton& a) {
  std::vector<int> label(static_cast<std::size_t>(a.state_count()), -1);
  std::deque<int> queue{a.initial};
  label[static_cast<std::size_t>(a.initial)] = 0;
  int fresh = 1;
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int d = 0; d < a.radix(); ++d) {
      const int to = a.next(q, d);
      if (label[static_cast<std::size_t>(to)] < 0) {
        label[static_cast<std::size_t>(to)] = fresh++;
        queue.push_back(to);
      }
    }
  }
  return label;
}

}  // namespace

int run(const Dfao& a, const DigitString& digits) { return run_from(a, a.initial, digits); }
int run(const Dfa& a, const DigitString& digits) { return run_from(a, a.initial, digits); }

std::vector<int> trace(const Dfao& a, const DigitString& digits) {
  std::vector<int> states{a.initial};
  for (Digit d : digits.digits) {
    if (d > a.max_digit) throw DomainError("digit " + std::to_string(d) + " outside the input alphabet");
    states.push_back(a.next(states.back(), d));
  }
  return states;
}

int evaluate_ac(const Dfao& a, const Substitution& subst, std::int64_t n) {
  if (n < 1) throw DomainError("abelian complexity is defined for n >= 1, got " + std::to_string(n));
  if (a.alpha != subst.alpha()) throw PreconditionError("automaton was built for a different substitution");
  const int out = a.outputs[static_cast<std::size_t>(run(a, greedy_representation(subst, n)))];
  if (out == kNoOutput) throw InvariantViolation("normal representation of " + std::to_string(n) + " has no output");
  return out;
}

Dfao minimize_dfao(const Dfao& a) {
  const Quotient qt = quotient(a, a.outputs);
  Dfao out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = initial_class(a, qt);
  out.transitions = class_transitions(a, qt);
  out.outputs.assign(static_cast<std::size_t>(qt.classes), kNoOutput);
  for (std::size_t i = 0; i < qt.kept.size(); ++i)
    out.outputs[static_cast<std::size_t>(qt.class_of[i])] = a.outputs[static_cast<std::size_t>(qt.kept[i])];
  return out;
}

Dfao reduce_dfao(const Dfao& a) {
  const int n = a.state_count();
  const int radix = a.radix();
  std::vector<int> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<int>, int> first;
    std::vector<int> merged = rep;
    std::vector<int> sig(static_cast<std::size_t>(radix + 1));
    for (int q = 0; q < n; ++q) {
      if (rep[static_cast<std::size_t>(q)] != q || q == a.initial) continue;
      sig[0] = a.outputs[static_cast<std::size_t>(q)];
      for (int d = 0; d < radix; ++d) sig[static_cast<std::size_t>(d + 1)] = rep[static_cast<std::size_t>(a.next(q, d))];
      const auto [it, fresh] = first.emplace(sig, q);
      if (!fresh) {
        merged[static_cast<std::size_t>(q)] = it->second;
        changed = true;
      }
    }
    for (int q = 0; q < n; ++q) rep[static_cast<std::size_t>(q)] = merged[static_cast<std::size_t>(rep[static_cast<std::size_t>(q)])];
  }
  // Representatives are the smallest members, so this numbering matches minimize_dfao's.
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int q = 0; q < n; ++q)
    if (rep[static_cast<std::size_t>(q)] == q) id[static_cast<std::size_t>(q)] = count++;
  Dfao out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = id[static_cast<std::size_t>(a.initial)];
  out.transitions.resize(static_cast<std::size_t>(count * radix));
  out.outputs.resize(static_cast<std::size_t>(count));
  for (int q = 0; q < n; ++q) {
    const int c = id[static_cast<std::size_t>(q)];
    if (c < 0) continue;
    out.outputs[static_cast<std::size_t>(c)] = a.outputs[static_cast<std::size_t>(q)];
    for (int d = 0; d < radix; ++d)
      out.transitions[static_cast<std::size_t>(c * radix + d)] = id[static_cast<std::size_t>(rep[static_cast<std::size_t>(a.next(q, d))])];
  }
  return out;
}

Dfa value_acceptor(const Dfao& a, int c) {
  Dfa out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = a.initial;
  out.transitions = a.transitions;
  out.accepting.reserve(a.outputs.size());
  for (int o : a.outputs) out.accepting.push_back(o == c ? 1 : 0);
  return out;
}

Dfa minimize_dfa(const Dfa& a) {
  const std::vector<int> color(a.accepting.begin(), a.accepting.end());
  const Quotient qt = quotient(a, color);
  Dfa out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = initial_class(a, qt);
  out.transitions = class_transitions(a, qt);
  out.accepting.assign(static_cast<std::size_t>(qt.classes), 0);
  for (std::size_t i = 0; i < qt.kept.size(); ++i)
    out.accepting[static_cast<std::size_t>(qt.class_of[i])] = a.accepting[static_cast<std::size_t>(qt.kept[i])];
  return out;
}

std::set<int> output_range(const Dfao& a, const Substitution& subst, bool normal_only) {
  std::optional<AdmissibilityAutomaton> adm;
  if (normal_only) {
    if (subst.alpha() != a.alpha) throw PreconditionError("automaton was built for a different substitution");
    adm.emplace(subst);
  }
  // Product state (q, admissibility state, seen a nonzero digit).
  using Node = std::tuple<int, int, bool>;
  std::set<Node> seen;
  std::deque<Node> queue;
  auto push = [&](Node n) {
    if (seen.insert(n).second) queue.push_back(n);
  };
  push({a.initial, adm ? adm->start() : 0, false});
  std::set<int> out;
  while (!queue.empty()) {
    const auto [q, s, started] = queue.front();
    queue.pop_front();
    if (started && a.outputs[static_cast<std::size_t>(q)] != kNoOutput) out.insert(a.outputs[static_cast<std::size_t>(q)]);
    for (int d = 0; d < a.radix(); ++d) {
      int t = 0;
      if (adm) {
        if (d > adm->max_digit()) continue;
        t = adm->next(s, d);
        if (t == AdmissibilityAutomaton::kReject) continue;
      }
      push({a.next(q, d), t, started || d != 0});
    }
  }
  return out;
}

DigitString FamilyPattern::instance(int j) const {
  DigitString s = head;
  for (int i = 0; i < j; ++i) s.digits.insert(s.digits.end(), cycle.digits.begin(), cycle.digits.end());
  s.digits.insert(s.digits.end(), tail.digits.begin(), tail.digits.end());
  return s;
}

bool verify_family(const Dfao& a, const FamilyPattern& pattern, int expected) {
  if (pattern.cycle.empty()) throw PreconditionError("family cycle must be nonempty");
  if (pattern.min_repetitions < 0) throw PreconditionError("min_repetitions must be >= 0");
  // States at cycle boundaries: s_0 = after head, s_{j+1} = s_j after one cycle.
  std::vector<int> boundary;
  std::map<int, int> first_seen;
  int s = run(a, pattern.head);
  while (!first_seen.count(s)) {
    first_seen.emplace(s, static_cast<int>(boundary.size()));
    boundary.push_back(s);
    s = run_from(a, s, pattern.cycle);
  }
  const int loop_start = first_seen.at(s);
  const int period = static_cast<int>(boundary.size()) - loop_start;
  auto state_at = [&](int j) {
    if (j < static_cast<int>(boundary.size())) return boundary[static_cast<std::size_t>(j)];
    return boundary[static_cast<std::size_t>(loop_start + (j - loop_start) % period)];
  };
  const int from = pattern.min_repetitions;
  const int to = std::max(from, loop_start) + period;
  for (int j = from; j < to; ++j) {
    const int q = run_from(a, state_at(j), pattern.tail);
    if (a.outputs[static_cast<std::size_t>(q)] != expected) return false;
  }
  return true;
}

int balance_bound(const ClosureTables& tables) {
  const int m = tables.m();
  std::vector<std::vector<ParikhVector>> per_pair;
  per_pair.reserve(tables.catalog.size());
  for (PairId j = 1; j <= tables.catalog.size(); ++j) per_pair.push_back(vect(tables.catalog.at(j), m));
  int bound = 0;
  for (const auto& z : tables.zsets) {
    std::vector<int> lo(static_cast<std::size_t>(m), 0);
    std::vector<int> hi(static_cast<std::size_t>(m), 0);
    bool first = true;
    for (PairId j : z.ids) {
      for (const auto& v : per_pair[j - 1]) {
        for (int l = 0; l < m; ++l) {
          const int x = v[static_cast<std::size_t>(l)];
          if (first) {
            lo[static_cast<std::size_t>(l)] = hi[static_cast<std::size_t>(l)] = x;
          } else {
            lo[static_cast<std::size_t>(l)] = std::min(lo[static_cast<std::size_t>(l)], x);
            hi[static_cast<std::size_t>(l)] = std::max(hi[static_cast<std::size_t>(l)], x);
          }
        }
        first = false;
      }
    }
    for (int l = 0; l < m; ++l) bound = std::max(bound, hi[static_cast<std::size_t>(l)] - lo[static_cast<std::size_t>(l)]);
  }
  return bound;
}

Dfa canonical_form(const Dfa& a) {
  const auto label = bfs_relabel(a);
  const int n = static_cast<int>(std::count_if(label.begin(), label.end(), [](int l) { return l >= 0; }));
  Dfa out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = 0;
  out.transitions.assign(static_cast<std::size_t>(n * a.radix()), 0);
  out.accepting.assign(static_cast<std::size_t>(n), 0);
  for (int q = 0; q < a.state_count(); ++q) {
    const int l = label[static_cast<std::size_t>(q)];
    if (l < 0) continue;
    out.accepting[static_cast<std::size_t>(l)] = a.accepting[static_cast<std::size_t>(q)];
    for (int d = 0; d < a.radix(); ++d) out.set_next(l, d, label[static_cast<std::size_t>(a.next(q, d))]);
  }
  return out;
}

Dfao canonical_form(const Dfao& a) {
  const auto label = bfs_relabel(a);
  const int n = static_cast<int>(std::count_if(label.begin(), label.end(), [](int l) { return l >= 0; }));
  Dfao out;
  out.alpha = a.alpha;
  out.max_digit = a.max_digit;
  out.initial = 0;
  out.transitions.assign(static_cast<std::size_t>(n * a.radix()), 0);
  out.outputs.assign(static_cast<std::size_t>(n), kNoOutput);
  for (int q = 0; q < a.state_count(); ++q) {
    const int l = label[static_cast<std::size_t>(q)];
    if (l < 0) continue;
    out.outputs[static_cast<std::size_t>(l)] = a.outputs[static_cast<std::size_t>(q)];
    for (int d = 0; d < a.radix(); ++d) out.set_next(l, d, label[static_cast<std::size_t>(a.next(q, d))]);
  }
  return out;
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  const Dfa x = canonical_form(a);
  const Dfa y = canonical_form(b);
  return x.max_digit == y.max_digit && x.transitions == y.transitions && x.accepting == y.accepting;
}

std::optional<std::vector<DigitString>> finite_language(const Dfa& a) {
  const int n = a.state_count();
  // Co-reachability of accepting states.
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    for (int d = 0; d < a.radix(); ++d) rev[static_cast<std::size_t>(a.next(q, d))].push_back(q);
  std::vector<std::uint8_t> useful(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  for (int q = 0; q < n; ++q) {
    if (a.accepting[static_cast<std::size_t>(q)]) {
      useful[static_cast<std::size_t>(q)] = 1;
      queue.push_back(q);
    }
  }
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int p : rev[static_cast<std::size_t>(q)]) {
      if (!useful[static_cast<std::size_t>(p)]) {
        useful[static_cast<std::size_t>(p)] = 1;
        queue.push_back(p);
      }
    }
  }

  // Cycle detection over useful states reachable after a nonzero first digit.
  std::vector<std::uint8_t> color(static_cast<std::size_t>(n), 0);  // 0 new, 1 on stack, 2 done
  bool cyclic = false;
  auto dfs = [&](auto&& self, int q) -> void {
    color[static_cast<std::size_t>(q)] = 1;
    for (int d = 0; d < a.radix() && !cyclic; ++d) {
      const int to = a.next(q, d);
      if (!useful[static_cast<std::size_t>(to)]) continue;
      if (color[static_cast<std::size_t>(to)] == 1) cyclic = true;
      else if (color[static_cast<std::size_t>(to)] == 0) self(self, to);
    }
    color[static_cast<std::size_t>(q)] = 2;
  };
  for (int d = 1; d < a.radix() && !cyclic; ++d) {
    const int s = a.next(a.initial, d);
    if (useful[static_cast<std::size_t>(s)] && color[static_cast<std::size_t>(s)] == 0) dfs(dfs, s);
  }
  if (cyclic) return std::nullopt;

  std::vector<DigitString> words;
  DigitString prefix;
  auto collect = [&](auto&& self, int q) -> void {
    if (a.accepting[static_cast<std::size_t>(q)]) words.push_back(prefix);
    for (int d = 0; d < a.radix(); ++d) {
      const int to = a.next(q, d);
      if (!useful[static_cast<std::size_t>(to)]) continue;
      prefix.digits.push_back(static_cast<Digit>(d));
      self(self, to);
      prefix.digits.pop_back();
    }
  };
  for (int d = 1; d < a.radix(); ++d) {
    const int s = a.next(a.initial, d);
    if (!useful[static_cast<std::size_t>(s)]) continue;
    prefix.digits.assign(1, static_cast<Digit>(d));
    collect(collect, s);
  }
  std::sort(words.begin(), words.end(), [](const DigitString& x, const DigitString& y) {
    return x.size() != y.size() ? x.size() < y.size() : x.digits < y.digits;
  });
  return words;
}

}  // namespace abac
