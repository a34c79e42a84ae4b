#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eigenpoly {

enum class ErrorKind {
  Parse,
  InvalidOperator,
  InvalidScale,
  NotExactlySolvable,
  NoJ0,
  NotDegenerate,
  ConditionInapplicable,
  NonUnique,
  ResidualNonzero,
  NoConvergence,
  DegreeZero,
  EvaluationAtRoot,
  Precondition,
  NotRealRooted,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised when a diagonal entry of the triangular eigen-system vanishes.
class NonUniqueError : public Error {
 public:
  NonUniqueError(long n, long s);

  long degree() const noexcept { return n_; }
  long singular_index() const noexcept { return s_; }

 private:
  long n_;
  long s_;
};

}  // namespace eigenpoly
