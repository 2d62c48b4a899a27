#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "abac/automaton_types.hpp"

namespace abac {

using AnyAutomaton = std::variant<Dfao, Dfa>;

/// JSON automaton file. Field order and record order are fixed so the output
/// is byte-stable: kind, m, alpha, digit_alphabet_max, initial, states, transitions.
std::string to_json(const Dfao& a);
std::string to_json(const Dfa& a);

/// Throws ParseError (byte offset for syntax errors, record index for schema errors).
AnyAutomaton automaton_from_json(std::string_view text);
Dfao dfao_from_json(std::string_view text);
Dfa dfa_from_json(std::string_view text);

/// Graphviz rendering. Parallel edges are merged into one edge labeled "0,1".
std::string to_dot(const Dfao& a);
std::string to_dot(const Dfa& a);

}  // namespace abac
