#pragma once

#include <stdexcept>
#include <string>

namespace hfejer {

// Base for every failure raised by the library. Precondition violations on
// plain arguments (negative counts, bad precision) use std::invalid_argument.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

class NotOdd : public Error {
 public:
  explicit NotOdd(const std::string& what) : Error(what) {}
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("cannot reverse a polynomial with zero constant term") {}
};

class DuplicateAbscissa : public Error {
 public:
  DuplicateAbscissa() : Error("interpolation abscissae are not pairwise distinct") {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

class KnotSpacingError : public Error {
 public:
  explicit KnotSpacingError(const std::string& what) : Error(what) {}
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " values, got " + std::to_string(got)) {}
};

class InsufficientTrainingPoints : public Error {
 public:
  InsufficientTrainingPoints(std::size_t needed, std::size_t got)
      : Error("need at least " + std::to_string(needed) + " training points, got " +
              std::to_string(got)) {}
};

}  // namespace hfejer
