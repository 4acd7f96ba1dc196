#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stid {

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::string const& what, std::size_t line, std::size_t column) {
    if (line == 0 && column == 0) return what;
    std::string out = what + " (";
    if (line != 0) out += "line " + std::to_string(line);
    if (line != 0 && column != 0) out += ", ";
    if (column != 0) out += "column " + std::to_string(column);
    return out + ")";
  }

  std::size_t line_;
  std::size_t column_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

/// A configured enumeration or set-size limit was hit. Results are never truncated silently.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition of a verification step (e.g. lifting a refuted identity).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stid
