#pragma once

#include <stdexcept>
#include <string>

namespace sccay {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arity, membership, or group-mismatch violations.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A construction or operation was called outside its parameter domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration or search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A construction produced data that failed one of its own consistency checks.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (group names, graph6, edge lists, set files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sccay
