#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zdp {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Poset construction and validation.
class ValidationError : public Error {
public:
  using Error::Error;
};
class CycleError : public ValidationError {
public:
  using ValidationError::ValidationError;
};
class NoLeastElementError : public ValidationError {
public:
  using ValidationError::ValidationError;
};
class DuplicateLabelError : public ValidationError {
public:
  using ValidationError::ValidationError;
};
class UnknownLabelError : public ValidationError {
public:
  using ValidationError::ValidationError;
};
class TooManyElementsError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

/// Text-format error carrying the 1-based line it was found on.
class ParseError : public ValidationError {
public:
  ParseError(std::size_t line, const std::string &what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Preconditions of analyses.
class EmptySubsetError : public Error {
public:
  using Error::Error;
};
class NoZeroDivisorsError : public Error {
public:
  NoZeroDivisorsError() : Error("no zero-divisors") {}
};
class TrivialPosetError : public Error {
public:
  TrivialPosetError() : Error("poset has a single element") {}
};
class NotAZeroDivisorError : public Error {
public:
  using Error::Error;
};
class TooFewVerticesError : public Error {
public:
  using Error::Error;
};
class InvalidGraphError : public Error {
public:
  using Error::Error;
};

// Size caps.
class OracleCapExceeded : public Error {
public:
  using Error::Error;
};
class CapExceeded : public Error {
public:
  using Error::Error;
};

// Generators.
class UnknownExampleError : public Error {
public:
  using Error::Error;
};
class BadParamsError : public Error {
public:
  using Error::Error;
};

} // namespace zdp
