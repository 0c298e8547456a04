#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monalg {

/// An input violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text; carries the 1-based position of the offending token.
class ParseError : public PreconditionError {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : PreconditionError(what + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// An explicit enumeration budget was exhausted before the answer was known.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed, or a proven theorem was contradicted.
/// Always a bug in this library, never a property of the input.
class InternalConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PreconditionError(what);
}

inline void check_consistency(bool cond, const std::string& what) {
  if (!cond) throw InternalConsistencyError(what);
}

}  // namespace monalg
