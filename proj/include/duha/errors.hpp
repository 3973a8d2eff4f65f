#ifndef DUHA_ERRORS_HPP
#define DUHA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duha {

/// Caller violated an API contract (mixed fields, bad dimensions, bad config).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined request (inverse of zero, log of a series
/// without unit constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// Raised when inversion in Q[t]/(m) meets a zero divisor, i.e. m was not
/// irreducible.
class ReducibleModulus : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters fall outside the families the library handles.
class UnsupportedCase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (negative homology, inhomogeneous column,
/// d∘d != 0). Always a bug or a wrong formula, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace duha

#endif  // DUHA_ERRORS_HPP
