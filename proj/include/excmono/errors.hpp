#pragma once

#include <stdexcept>
#include <string>

namespace excmono {

// Base of every error the toolkit raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad Cartan type label, unsupported rank, malformed input file.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside what an operation supports
// (e.g. -1 not in W, or a type the two-group construction rejects).
class UnsupportedTypeError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// lambda in {0, 1}, or a field without a character of order 4.
class DegenerateFiberError : public Error {
 public:
  using Error::Error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

// A dimension-level prediction could not be realized by any candidate.
class PredictionFailure : public Error {
 public:
  using Error::Error;
};

class GroupOverflowError : public Error {
 public:
  using Error::Error;
};

class ClassMismatchError : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure: two independent routes disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace excmono
