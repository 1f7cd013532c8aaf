#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ellfm {

/// A binary operation received classes living on different surfaces (X vs X^).
class SideMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain (wrong rank, nonzero fibre degree, ...).
class PreconditionViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input. `column` is 1-based within the offending token.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

}  // namespace ellfm
