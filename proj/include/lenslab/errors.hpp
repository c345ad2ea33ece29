#pragma once

#include <stdexcept>
#include <string>

namespace lenslab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input or a request outside an operation's domain.
/// The CLI maps these to exit status 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A convention or consistency check inside the library failed.
/// These indicate a bug, never bad input; the CLI maps them to exit status 2.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class InvalidFraction : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotALensSpace : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Matrix or complex dimensions do not line up.
class ShapeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A differential that does not square to zero.
class InvalidComplex : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A certificate rule applied to premises that do not satisfy it.
class RuleViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Input does not meet the hypotheses of a certification procedure.
/// This is not a disproof of the conclusion.
class HypothesisNotMet : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidDiagram : public DomainError {
 public:
  using DomainError::DomainError;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InvariantError(what);
}

}  // namespace lenslab
