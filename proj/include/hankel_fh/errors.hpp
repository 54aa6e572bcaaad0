#pragma once

#include <stdexcept>
#include <string>

namespace hankel_fh {

/// Input did not satisfy a documented precondition. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not be carried out to the requested accuracy.
/// Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidSpec : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// V is not one-cut regular on [-1,1]: psi is not positive.
class NotRegular : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The equilibrium measure of V is not supported on exactly [-1,1].
class SupportNotNormalized : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// V does not grow fast enough to truncate an unbounded integral.
class InvalidPotential : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class LogZeroError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DeterminantUnderflow : public NumericalError {
 public:
  DeterminantUnderflow(const std::string& what, double pivot_decay)
      : NumericalError(what), pivot_decay_(pivot_decay) {}
  double pivot_decay() const noexcept { return pivot_decay_; }

 private:
  double pivot_decay_;
};

}  // namespace hankel_fh
