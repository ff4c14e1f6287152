#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace niemytzki {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands disagree on dimension, or an arity does not match the session.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a value was violated (point outside X_n, radius <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a set expression or a rational literal.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("at byte " + std::to_string(offset) + ": " + message), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Membership of a boundary point in A cannot be decided (Bernstein subtree).
class UndecidableMembership : public Error {
 public:
  using Error::Error;
};

}  // namespace niemytzki
