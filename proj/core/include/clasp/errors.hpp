#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace clasp {

/// Root of every library error. Callers that only care about
/// "domain failure vs. bad input" can catch Error and InputError.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax, schema, or out-of-range identifiers.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : InputError(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed object that fails a domain precondition
/// (not a pattern, no internal edge, uncertifiable leaf, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class CertificateError : public Error {
 public:
  CertificateError(const std::string& msg, std::string failing)
      : Error(msg), failing_(std::move(failing)) {}
  const std::string& failing_item() const { return failing_; }

 private:
  std::string failing_;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Input that belongs to the loop (non-tree) part of the invariant.
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

/// Wraps an upstream failure with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& msg, bool input_error)
      : Error(stage + ": " + msg), stage_(std::move(stage)), input_error_(input_error) {}
  const std::string& stage() const { return stage_; }
  bool input_error() const { return input_error_; }

 private:
  std::string stage_;
  bool input_error_;
};

}  // namespace clasp
