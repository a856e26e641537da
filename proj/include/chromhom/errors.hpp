#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromhom {

/// Malformed input file; carries the 1-based line number when one applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A structural invariant failed inside the engine (d^2 != 0, a bad block, ...).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A custom algebra failed validation; the message names the violated axiom.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromhom
