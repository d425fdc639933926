#ifndef TTPACK_ERROR_HPP
#define TTPACK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ttpack {

// Caller handed us something outside an operation's contract.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text-format parse failure; line is 1-based, 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A bounded search ran out of its node/flip budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance is too large for an exact routine.
class TooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace ttpack

#endif  // TTPACK_ERROR_HPP
