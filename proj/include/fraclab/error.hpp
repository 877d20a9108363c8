#pragma once

#include <stdexcept>
#include <string>

namespace fraclab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at a pole (e.g. Gamma at a non-positive integer).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative evaluation failed to reach its tolerance within its term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two sampled objects that must share a time grid do not.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameter record violates a model constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Reading or writing an artifact failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fraclab
