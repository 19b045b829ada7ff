#pragma once

#include <stdexcept>
#include <string>

namespace bandlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise inadmissible argument to an elementary function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied parameter violates a documented precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A user function returned a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double location)
      : Error(what), location_(location) {}
  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// A computation would need more memory or terms than the library allows.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A value exceeds the double-precision range; use the log-space twin.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Linear-algebra breakdown (rank deficiency, non-finite weights).
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, int degree)
      : Error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

}  // namespace bandlab
