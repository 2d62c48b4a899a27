#include "abac/serialize.hpp"

#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "abac/error.hpp"

namespace abac {

namespace {

using Json = nlohmann::ordered_json;

Json header(const char* kind, const std::vector<int>& alpha, int max_digit, int initial) {
  Json j;
  j["kind"] = kind;
  j["m"] = alpha.size();
  j["alpha"] = alpha;
  j["digit_alphabet_max"] = max_digit;
  j["initial"] = initial;
  return j;
}

template <class Automaton>
Json transitions_json(const Automaton& a) {
  Json out = Json::array();
  for (int q = 0; q < a.state_count(); ++q) {
    for (int d = 0; d < a.radix(); ++d) {
      Json t;
      t["from"] = q;
      t["digit"] = d;
      t["to"] = a.next(q, d);
      out.push_back(std::move(t));
    }
  }
  return out;
}

int as_int(const Json& j, const char* field, std::size_t record) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw ParseError(std::string("missing or non-integer field '") + field + "'", record);
  }
  return j.at(field).get<int>();
}

struct Common {
  std::string kind;
  std::vector<int> alpha;
  int max_digit = 0;
  int initial = 0;
  int states = 0;
  std::vector<std::int32_t> transitions;
};

Common parse_common(const Json& j) {
  if (!j.is_object()) throw ParseError("automaton file must be a JSON object", 0);
  Common c;
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("missing field 'kind'", 0);
  c.kind = j.at("kind").get<std::string>();
  if (c.kind != "dfao" && c.kind != "dfa") throw ParseError("kind must be \"dfao\" or \"dfa\"", 0);
  const int m = as_int(j, "m", 0);
  if (!j.contains("alpha") || !j.at("alpha").is_array()) throw ParseError("missing field 'alpha'", 0);
  for (const auto& x : j.at("alpha")) {
    if (!x.is_number_integer()) throw ParseError("alpha entries must be integers", 0);
    c.alpha.push_back(x.get<int>());
  }
  if (static_cast<int>(c.alpha.size()) != m) throw ParseError("m does not match the length of alpha", 0);
  c.max_digit = as_int(j, "digit_alphabet_max", 0);
  if (c.max_digit < 0 || c.max_digit > 9) throw ParseError("digit_alphabet_max must be in 0..9", 0);
  c.initial = as_int(j, "initial", 0);

  if (!j.contains("states") || !j.at("states").is_array()) throw ParseError("missing array 'states'", 0);
  c.states = static_cast<int>(j.at("states").size());
  if (c.initial < 0 || c.initial >= c.states) throw ParseError("initial state out of range", 0);
  for (std::size_t i = 0; i < j.at("states").size(); ++i) {
    if (as_int(j.at("states")[i], "id", i) != static_cast<int>(i)) throw ParseError("state ids must be 0,1,2,... in order", i);
  }

  if (!j.contains("transitions") || !j.at("transitions").is_array()) throw ParseError("missing array 'transitions'", 0);
  const int radix = c.max_digit + 1;
  c.transitions.assign(static_cast<std::size_t>(c.states * radix), -1);
  std::size_t i = 0;
  for (const auto& t : j.at("transitions")) {
    const int from = as_int(t, "from", i);
    const int digit = as_int(t, "digit", i);
    const int to = as_int(t, "to", i);
    if (from < 0 || from >= c.states || to < 0 || to >= c.states) throw ParseError("transition state out of range", i);
    if (digit < 0 || digit >= radix) throw ParseError("transition digit out of range", i);
    auto& slot = c.transitions[static_cast<std::size_t>(from * radix + digit)];
    if (slot >= 0) throw ParseError("duplicate transition", i);
    slot = to;
    ++i;
  }
  for (std::size_t k = 0; k < c.transitions.size(); ++k) {
    if (c.transitions[k] < 0) throw ParseError("missing transition for state " + std::to_string(k / static_cast<std::size_t>(radix)), k / static_cast<std::size_t>(radix));
  }
  return c;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

std::string dot_escape_label(const std::string& s) { return "\"" + s + "\""; }

template <class Automaton, class NodeFn>
std::string dot_common(const Automaton& a, const char* name, NodeFn node_attrs) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (int q = 0; q < a.state_count(); ++q) os << "  q" << q << " [" << node_attrs(q) << "];\n";
  os << "  __start -> q" << a.initial << ";\n";
  for (int q = 0; q < a.state_count(); ++q) {
    std::map<int, std::string> merged;
    for (int d = 0; d < a.radix(); ++d) {
      auto& label = merged[a.next(q, d)];
      if (!label.empty()) label += ',';
      label += std::to_string(d);
    }
    for (const auto& [to, label] : merged) os << "  q" << q << " -> q" << to << " [label=" << dot_escape_label(label) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_json(const Dfao& a) {
  Json j = header("dfao", a.alpha, a.max_digit, a.initial);
  Json states = Json::array();
  for (int q = 0; q < a.state_count(); ++q) {
    Json s;
    s["id"] = q;
    const int o = a.outputs[static_cast<std::size_t>(q)];
    if (o == kNoOutput) s["output"] = nullptr;
    else s["output"] = o;
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  j["transitions"] = transitions_json(a);
  return j.dump(1) + "\n";
}

std::string to_json(const Dfa& a) {
  Json j = header("dfa", a.alpha, a.max_digit, a.initial);
  Json states = Json::array();
  for (int q = 0; q < a.state_count(); ++q) {
    Json s;
    s["id"] = q;
    s["accepting"] = a.accepting[static_cast<std::size_t>(q)] != 0;
    states.push_back(std::move(s));
  }
  j["states"] = std::move(states);
  j["transitions"] = transitions_json(a);
  return j.dump(1) + "\n";
}

AnyAutomaton automaton_from_json(std::string_view text) {
  const Json j = parse_text(text);
  Common c = parse_common(j);
  const auto& states = j.at("states");
  if (c.kind == "dfao") {
    Dfao a;
    a.alpha = std::move(c.alpha);
    a.max_digit = c.max_digit;
    a.initial = c.initial;
    a.transitions = std::move(c.transitions);
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (!states[i].contains("output")) throw ParseError("state record lacks 'output'", i);
      const auto& o = states[i].at("output");
      if (o.is_null()) a.outputs.push_back(kNoOutput);
      else if (o.is_number_integer() && o.get<int>() >= 0) a.outputs.push_back(o.get<int>());
      else throw ParseError("output must be a non-negative integer or null", i);
    }
    return a;
  }
  Dfa a;
  a.alpha = std::move(c.alpha);
  a.max_digit = c.max_digit;
  a.initial = c.initial;
  a.transitions = std::move(c.transitions);
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].contains("accepting") || !states[i].at("accepting").is_boolean()) {
      throw ParseError("state record lacks boolean 'accepting'", i);
    }
    a.accepting.push_back(states[i].at("accepting").get<bool>() ? 1 : 0);
  }
  return a;
}

Dfao dfao_from_json(std::string_view text) {
  auto any = automaton_from_json(text);
  if (auto* a = std::get_if<Dfao>(&any)) return std::move(*a);
  throw ParseError("expected kind \"dfao\"", 0);
}

Dfa dfa_from_json(std::string_view text) {
  auto any = automaton_from_json(text);
  if (auto* a = std::get_if<Dfa>(&any)) return std::move(*a);
  throw ParseError("expected kind \"dfa\"", 0);
}

std::string to_dot(const Dfao& a) {
  return dot_common(a, "dfao", [&](int q) {
    const int o = a.outputs[static_cast<std::size_t>(q)];
    const std::string out = o == kNoOutput ? "-" : std::to_string(o);
    return "label=" + dot_escape_label("q" + std::to_string(q) + "/" + out);
  });
}

std::string to_dot(const Dfa& a) {
  return dot_common(a, "dfa", [&](int q) {
    const char* shape = a.accepting[static_cast<std::size_t>(q)] ? "doublecircle" : "circle";
    return std::string("shape=") + shape + ", label=" + dot_escape_label("q" + std::to_string(q));
  });
}

}  // namespace abac
