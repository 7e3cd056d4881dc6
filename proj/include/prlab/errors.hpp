#pragma once

#include <stdexcept>
#include <string>

namespace prlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A size cap (module cardinality, direct-sum arity, enumeration count) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A module could not be matched to any representative of a universe.
class NotInUniverse : public Error {
 public:
  using Error::Error;
};

/// Two preradical tables (or a table and a module) live over different universes.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), message(msg), position(pos) {}
  std::string message;
  std::size_t position;
};

}  // namespace prlab
