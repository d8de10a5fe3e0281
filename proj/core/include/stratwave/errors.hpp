#pragma once

#include <stdexcept>
#include <string>

namespace stratwave {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition violations: invalid parameters, pole hits, degenerate indices.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Evaluation requested on (or too close to) a branch cut.
class BranchCutError : public Error {
 public:
  using Error::Error;
};

// A series or iteration failed to converge within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A quadrature did not meet the requested relative tolerance.
class ToleranceError : public Error {
 public:
  ToleranceError(const std::string& what, double requested, double achieved)
      : Error(what), requested_(requested), achieved_(achieved) {}
  double requested() const { return requested_; }
  double achieved() const { return achieved_; }

 private:
  double requested_;
  double achieved_;
};

// Grid or truncation domain too small for the requested operation.
class DomainTooSmallError : public Error {
 public:
  using Error::Error;
};

// Discretization cannot resolve the requested dynamics (e.g. phase mixing).
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace stratwave
