#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abac {

/// A letter outside the substitution alphabet.
class InvalidLetter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain of a function (negative n, digit > alpha_0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition does not hold for the given inputs.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Internal consistency check failed. Always a bug or an unsupported input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The closure exploration hit its iteration cap before reaching a fixed point.
class ClosureLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton file. `position` is a byte offset for syntax errors,
/// or the index of the offending record for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace abac
