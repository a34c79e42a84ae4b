#include "eigenpoly/error.hpp"

namespace eigenpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidOperator: return "invalid-operator";
    case ErrorKind::InvalidScale: return "invalid-scale";
    case ErrorKind::NotExactlySolvable: return "not-exactly-solvable";
    case ErrorKind::NoJ0: return "no-j0";
    case ErrorKind::NotDegenerate: return "not-degenerate";
    case ErrorKind::ConditionInapplicable: return "condition-inapplicable";
    case ErrorKind::NonUnique: return "non-unique";
    case ErrorKind::ResidualNonzero: return "residual-nonzero";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::DegreeZero: return "degree-zero";
    case ErrorKind::EvaluationAtRoot: return "evaluation-at-root";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::NotRealRooted: return "not-real-rooted";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

NonUniqueError::NonUniqueError(long n, long s)
    : Error(ErrorKind::NonUnique,
            "non-unique eigenpolynomial at n=" + std::to_string(n) +
                ": diagonal entry vanishes at s=" + std::to_string(s)),
      n_(n),
      s_(s) {}

}  // namespace eigenpoly
