#pragma once

#include <stdexcept>
#include <string>

namespace qstrat {

/// Malformed input: group DSL, theory strings, CLI arguments, JSON documents.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented size bound (group order, degree, conductor, prime bound) was exceeded.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested (theory, group) combination is outside what the engine computes.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but violates a mathematical precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A diagram handed to the colimit is not a functor.
class FunctorialityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qstrat
