#pragma once

#include <stdexcept>
#include <string>

namespace ricci {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-positive metric
/// component, wrong number of summands, unsupported space type).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A space-definition document could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A space-definition document parsed but a field is missing or malformed.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what)
      : Error("schema error at '" + field + "': " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Structure data violates one of the algebraic invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed (root bracketing, step-size underflow).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ricci
