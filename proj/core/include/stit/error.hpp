#pragma once

#include <stdexcept>
#include <string>

namespace stit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model description that cannot be turned into a model at all: unknown
/// names, out-of-range history indices, cyclic order, too many points.
/// Frame-condition violations are not errors; see validate().
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Enumeration bounds exceed the configured caps.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a formula that mentions an agent the model does not have.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Malformed proof text.
class ProofFormatError : public Error {
 public:
  ProofFormatError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace stit
