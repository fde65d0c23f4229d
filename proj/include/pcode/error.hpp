#pragma once

#include <stdexcept>
#include <string>

namespace pcode {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands that do not belong to the same group.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed group, element or set literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Caller broke a precondition (wrong shape of connection set, bad witness, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search ran past its work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pcode
