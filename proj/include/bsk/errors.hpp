#pragma once

#include <stdexcept>
#include <string>

namespace bsk {

// Precondition or parameter-domain violation. The CLI maps it to exit status 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A gamma function evaluated at one of its poles.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Series requested outside its region of convergence.
class DivergenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Result would not fit in a double.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An iterative method ran out of budget before meeting its tolerance.
// The CLI maps it to exit status 3.
class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bsk
