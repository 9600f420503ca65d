#pragma once

#include <stdexcept>
#include <string>

namespace lbiso {

/// Base of every error raised by the library. The CLI maps the concrete
/// types onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Value outside the admissible range (e.g. a relaxation rate not in (0,2)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operator entry with the wrong total derivative degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Mismatched tensor or matrix shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A zero relaxation rate makes the defect equations unsolvable.
class SingularRelaxationError : public Error {
 public:
  using Error::Error;
};

/// A parameter family whose derived coefficients leave the admissible range.
class InfeasibleFamilyError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent configuration input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values appeared during time stepping.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, int step) : Error(what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

/// Operation not defined for the requested scheme.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lbiso
