#pragma once

// Reference values computed without the eigensolver: classical three-term
// recurrences and Jacobi-matrix eigenvalues in double precision.

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "support.hpp"

namespace eptest {

// Monic Laguerre: L_{n+1} = (x - (2n+1)) L_n - n^2 L_{n-1}.
inline std::vector<Polynomial> monic_laguerre(int max_n) {
  std::vector<Polynomial> l{P({1}), P({-1, 1})};
  for (int n = 1; n < max_n; ++n) {
    const Polynomial x_shift = P({-(2L * n + 1), 1});
    l.push_back(x_shift * l[n] - l[n - 1] * GaussianRational(static_cast<long>(n) * n));
  }
  return l;
}

// Monic Hermite (physicists' scaling): H_{n+1} = x H_n - (n/2) H_{n-1}.
inline std::vector<Polynomial> monic_hermite(int max_n) {
  std::vector<Polynomial> h{P({1}), P({0, 1})};
  for (int n = 1; n < max_n; ++n) {
    h.push_back(P({0, 1}) * h[n] - h[n - 1] * GaussianRational(Rational(n, 2)));
  }
  return h;
}

inline double largest_tridiagonal_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off) {
  const auto n = static_cast<Eigen::Index>(diag.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, i) = diag[static_cast<std::size_t>(i)];
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = off[static_cast<std::size_t>(i)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Largest zero of L_n: Jacobi matrix with diagonal 2k+1, off-diagonal k.
inline double laguerre_largest_zero(int n) {
  std::vector<double> diag, off;
  for (int k = 0; k < n; ++k) diag.push_back(2.0 * k + 1.0);
  for (int k = 1; k < n; ++k) off.push_back(k);
  return largest_tridiagonal_eigenvalue(diag, off);
}

// Largest zero of H_n: zero diagonal, off-diagonal sqrt(k/2).
inline double hermite_largest_zero(int n) {
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0), off;
  for (int k = 1; k < n; ++k) off.push_back(std::sqrt(k / 2.0));
  return largest_tridiagonal_eigenvalue(diag, off);
}

}  // namespace eptest
