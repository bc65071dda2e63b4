#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexfirst {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (length mismatch, bad index, malformed rotation, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration guard refused to run because the search space exceeds the cap.
class RefusalError : public Error {
 public:
  using Error::Error;
};

/// A documented contract of an operation does not hold for the given input.
class ContractError : public Error {
 public:
  using Error::Error;
};

class NotSupportedError : public Error {
 public:
  using Error::Error;
};

/// Prefix search descended deeper than the chain bound of the self-reduction allows.
class SelfReductionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lexfirst
