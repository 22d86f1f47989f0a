#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ssrm {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid distribution, kernel or configuration parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class DuplicateCenterError : public Error {
 public:
  DuplicateCenterError(std::size_t first, std::size_t second)
      : Error("duplicate RBF centers at rows " + std::to_string(first) + " and " +
              std::to_string(second)),
        first_(first),
        second_(second) {}
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// The interpolation matrix is numerically singular.
class IllConditionedError : public Error {
 public:
  explicit IllConditionedError(double rcond)
      : Error("interpolation matrix is ill-conditioned (reciprocal condition " +
              std::to_string(rcond) + ")"),
        rcond_(rcond) {}
  double rcond() const { return rcond_; }

 private:
  double rcond_;
};

class InsufficientSamplesError : public Error {
 public:
  using Error::Error;
};

class ShapeSelectionError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// A limit state function could not be evaluated at a given sample.
class LsfEvaluationError : public Error {
 public:
  LsfEvaluationError(std::size_t index, const std::string& what)
      : Error("limit state evaluation failed at sample " + std::to_string(index) + ": " + what),
        index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

}  // namespace ssrm
