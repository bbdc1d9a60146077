#pragma once

#include <stdexcept>
#include <string>

namespace sog {

/// Precondition or invariant violation in caller-supplied data.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A construction produced an object that fails its own postcondition.
/// Always a bug in this library, never a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed serialized input. Carries a 1-based line/column when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// No copy of the original graph could be read off a representation.
class NoNiceCopyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sog
