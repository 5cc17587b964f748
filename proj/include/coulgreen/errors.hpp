#pragma once

#include <stdexcept>
#include <string>

namespace coulgreen {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the admissible domain (bad parameters, wrong sizes, branch cuts).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested at (or within the rejection radius of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Block or operator dimensions do not fit together.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An adaptive strategy could not reach its target accuracy. `achieved` carries
/// the best error estimate that was obtained.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Two independent evaluation routes disagree beyond tolerance.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace coulgreen
