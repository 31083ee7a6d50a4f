#pragma once

#include <stdexcept>
#include <string>

namespace maskent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Field construction failures. Each cause is reported distinctly.
class FieldConstructionError : public Error {
 public:
  enum class Reason { non_prime_characteristic, invalid_degree, order_over_limit };

  FieldConstructionError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Out-of-range indices, length or field mismatches.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Mathematically undefined requests, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed the configured enumeration guard.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// Malformed, partial, or out-of-range function tables.
class TableError : public Error {
 public:
  using Error::Error;
};

}  // namespace maskent
