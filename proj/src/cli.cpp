#include "abac/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "abac/automaton.hpp"
#include "abac/closure.hpp"
#include "abac/error.hpp"
#include "abac/oracle.hpp"
#include "abac/serialize.hpp"

namespace abac::cli {

namespace {

struct Source {
  int m = 0;
  std::string alpha;  // comma list
  std::string automaton;
  bool minimize = false;
};

// Failure in a file or a path; carries the exit code kBadInput.
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_source_options(CLI::App& cmd, Source& src, bool allow_file = true) {
  cmd.add_option("--m", src.m, "m-bonacci alphabet size (m >= 2)");
  cmd.add_option("--alpha", src.alpha, "simple Parry exponents, comma separated (e.g. 2,1)");
  if (allow_file) cmd.add_option("--automaton", src.automaton, "automaton JSON file");
}

Substitution substitution_of(const Source& src) {
  if (!src.alpha.empty()) {
    std::vector<int> alpha;
    std::stringstream ss(src.alpha);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        alpha.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw UsageFailure("--alpha expects integers, got '" + item + "'");
      }
    }
    try {
      return Substitution::from_alpha(std::move(alpha));
    } catch (const DomainError& e) {
      throw UsageFailure(e.what());
    }
  }
  if (src.m != 0) {
    try {
      return Substitution::m_bonacci(src.m);
    } catch (const DomainError& e) {
      throw UsageFailure(e.what());
    }
  }
  throw UsageFailure("one of --m, --alpha or --automaton is required");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFailure("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw InputFailure("cannot read " + path);
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputFailure("cannot open " + path + " for writing");
  out << text;
  if (!out) throw InputFailure("cannot write " + path);
}

AnyAutomaton load_any(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return automaton_from_json(text);
  } catch (const ParseError& e) {
    throw InputFailure(path + ": " + e.what());
  }
}

Dfao load_dfao(const Source& src) {
  Dfao a;
  if (!src.automaton.empty()) {
    auto any = load_any(src.automaton);
    if (!std::holds_alternative<Dfao>(any)) throw InputFailure(src.automaton + ": expected kind \"dfao\"");
    a = std::get<Dfao>(std::move(any));
  } else {
    a = build_dfao(explore(substitution_of(src)));
  }
  return src.minimize ? minimize_dfao(a) : a;
}

Substitution substitution_of(const Dfao& a) {
  try {
    return Substitution::from_alpha(a.alpha);
  } catch (const DomainError& e) {
    throw InputFailure(std::string("automaton has an invalid alpha: ") + e.what());
  }
}

std::string join(const std::set<int>& values) {
  std::string s;
  for (int v : values) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << text;
  else write_file(out_path, text);
}

template <class Automaton>
std::string render(const Automaton& a, const std::string& format) {
  if (format == "json") return to_json(a);
  if (format == "dot") return to_dot(a);
  throw UsageFailure("--format must be json or dot for automaton output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abelian complexity automata for simple Parry words"};
  app.require_subcommand(1);

  Source src;
  std::string out_path;
  std::string format = "json";
  std::int64_t n = 0;
  std::int64_t from = 1;
  std::int64_t to = 0;
  bool want_trace = false;
  bool normal_only = false;
  bool minimize_result = false;
  int value = -1;
  std::string head, cycle, tail;
  int min_rep = 0;

  auto* build = app.add_subcommand("build", "explore the closure and write the unreduced DFAO");
  add_source_options(*build, src, false);
  build->add_option("--out", out_path, "write the automaton to this file");
  build->add_option("--format", format, "json or dot");
  build->add_flag("--minimize", src.minimize, "minimize before writing");

  auto* eval = app.add_subcommand("eval", "evaluate the abelian complexity");
  add_source_options(*eval, src);
  eval->add_option("n,--n", n, "value of n");
  eval->add_option("--from", from, "first n of a range");
  eval->add_option("--to", to, "last n of a range");
  eval->add_flag("--trace", want_trace, "print the visited states");
  eval->add_flag("--minimize", src.minimize, "evaluate on the minimized automaton");

  auto* minimize = app.add_subcommand("minimize", "minimize a DFAO");
  add_source_options(*minimize, src);
  minimize->add_option("--out", out_path, "write the minimized automaton to this file");
  minimize->add_option("--format", format, "json or dot");
  std::string method = "moore";
  minimize->add_option("--method", method, "moore (minimal) or merge (pairwise merging of identical rows)")
      ->check(CLI::IsMember({"moore", "merge"}));

  auto* acceptor = app.add_subcommand("acceptor", "DFA accepting representations with a given value");
  add_source_options(*acceptor, src);
  acceptor->add_option("--value", value, "output value c")->required();
  acceptor->add_flag("--minimize", minimize_result, "minimize the acceptor");
  acceptor->add_option("--out", out_path, "write the acceptor to this file");
  acceptor->add_option("--format", format, "json or dot");

  auto* range = app.add_subcommand("range", "set of output values");
  add_source_options(*range, src);
  range->add_flag("--normal-only", normal_only, "only states reached by normal representations");

  auto* balance = app.add_subcommand("balance", "balance bound from the closure tables");
  add_source_options(*balance, src, false);
  balance->add_option("--n", n, "also compute the window oracle bound for lengths up to n");

  auto* family = app.add_subcommand("verify-family", "check head.cycle^j.tail for all j >= min");
  add_source_options(*family, src);
  family->add_option("--head", head, "digits before the cycle");
  family->add_option("--cycle", cycle, "repeated digits")->required();
  family->add_option("--tail", tail, "digits after the cycle");
  family->add_option("--min", min_rep, "smallest repetition count");
  family->add_option("--value", value, "expected output")->required();

  auto* compare = app.add_subcommand("oracle-compare", "compare the automaton with the window oracle");
  add_source_options(*compare, src);
  compare->add_option("--from", from, "first n");
  compare->add_option("--to", to, "last n")->required();

  auto* exporter = app.add_subcommand("export", "render an automaton as JSON or DOT");
  add_source_options(*exporter, src);
  exporter->add_option("--format", format, "json or dot");
  exporter->add_option("--out", out_path, "output file (default stdout)");
  exporter->add_flag("--minimize", src.minimize, "minimize first");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) {
      const Substitution subst = substitution_of(src);
      const ClosureTables tables = explore(subst);
      Dfao a = build_dfao(tables);
      if (src.minimize) a = minimize_dfao(a);
      out << "states=" << a.state_count() << ", pairs=" << tables.catalog.size()
          << ", zsets=" << tables.state_count() << "\n";
      if (!out_path.empty()) write_file(out_path, render(a, format));
      return kOk;
    }
    if (*eval) {
      const Dfao a = load_dfao(src);
      const Substitution subst = substitution_of(a);
      std::int64_t lo = n;
      std::int64_t hi = n;
      if (to != 0) {
        lo = from;
        hi = to;
      }
      if (lo < 1 || hi < lo) throw UsageFailure("n must be >= 1 (abelian complexity is undefined at 0)");
      for (std::int64_t k = lo; k <= hi; ++k) {
        const DigitString rep = greedy_representation(subst, k);
        out << "n=" << k << " rep=" << rep.str() << " rho=" << evaluate_ac(a, subst, k);
        if (want_trace) {
          out << " trace=";
          const auto states = trace(a, rep);
          for (std::size_t i = 0; i < states.size(); ++i) out << (i ? "->" : "") << states[i];
        }
        out << "\n";
      }
      return kOk;
    }
    if (*minimize) {
      const Dfao loaded = load_dfao(src);
      const Dfao a = method == "merge" ? reduce_dfao(loaded) : minimize_dfao(loaded);
      out << a.state_count() << " states\n";
      if (!out_path.empty()) write_file(out_path, render(a, format));
      return kOk;
    }
    if (*acceptor) {
      Dfa a = value_acceptor(load_dfao(src), value);
      if (minimize_result) a = minimize_dfa(a);
      out << a.state_count() << " states\n";
      if (!out_path.empty()) write_file(out_path, render(a, format));
      return kOk;
    }
    if (*range) {
      const Dfao a = load_dfao(src);
      out << "range=" << join(output_range(a, substitution_of(a), normal_only)) << "\n";
      return kOk;
    }
    if (*balance) {
      const Substitution subst = substitution_of(src);
      const int bound = balance_bound(explore(subst));
      out << "balance=" << bound << "\n";
      if (n > 0) {
        const int oracle = brute_force_balance(subst, n);
        out << "oracle_balance=" << oracle << "\n";
        if (oracle > bound) return kCheckFailed;
      }
      return kOk;
    }
    if (*family) {
      const Dfao a = load_dfao(src);
      FamilyPattern p{DigitString::parse(head), DigitString::parse(cycle), DigitString::parse(tail), min_rep};
      const bool ok = verify_family(a, p, value);
      out << "family=" << head << "(" << cycle << ")^j" << tail << " min=" << min_rep << " value=" << value
          << " verified=" << (ok ? "true" : "false") << "\n";
      return ok ? kOk : kCheckFailed;
    }
    if (*compare) {
      const Dfao a = load_dfao(src);
      const Substitution subst = substitution_of(a);
      if (from < 1 || to < from) throw UsageFailure("need 1 <= --from <= --to");
      std::int64_t agree = 0;
      for (std::int64_t k = from; k <= to; ++k) {
        const int expected = static_cast<int>(brute_force_parikh_set(subst, k).size());
        const int got = evaluate_ac(a, subst, k);
        if (expected == got) ++agree;
        else out << "MISMATCH n=" << k << " automaton=" << got << " oracle=" << expected << "\n";
      }
      const std::int64_t total = to - from + 1;
      out << (agree == total ? "OK " : "FAIL ") << agree << "/" << total << "\n";
      return agree == total ? kOk : kCheckFailed;
    }
    if (*exporter) {
      const Dfao a = load_dfao(src);
      emit(render(a, format), out_path, out);
      return kOk;
    }
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputFailure& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const ClosureLimitExceeded& e) {
    err << "error: " << e.what() << " (raise ABAC_MAX_ITER to allow more)\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace abac::cli
