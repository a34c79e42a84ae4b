#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eigenpoly/eigensolver.hpp"
#include "eigenpoly/rootfinder.hpp"

namespace eigenpoly {

// ---------------------------------------------------------------------------
// Scaling and growth of the largest root

// Roots of q_n(z) = p_n(n^d z): every root of p_n divided by n^d, with n^d
// evaluated at the cloud's precision from the exact exponent.
RootCloud scaled_cloud(const Eigenpair& e, const Rational& d, Precision precision_bits);
RootCloud scale_cloud(const RootCloud& cloud, long n, const Rational& d);

struct GrowthRow {
  long n = 0;
  double r_n = 0.0;
  double err_radius = 0.0;
  std::optional<double> exponent;  // ln(r_n / prefactor) / ln n
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  // Least squares of ln r_n = ln c + gamma ln n; NaN with fewer than two rows.
  double fitted_gamma = 0.0;
  double fitted_c = 0.0;
  std::optional<double> prefactor_used;

  // n,r_n,exponent_n rows then a fitted_c,fitted_gamma trailer.
  std::string to_csv() const;
};

struct PowerFit {
  double gamma = 0.0;
  double c = 0.0;
};

PowerFit fit_power_law(const std::vector<double>& ns, const std::vector<double>& rs);

// Builds a report from already measured (n, r_n) pairs.
GrowthReport growth_report_from(std::vector<GrowthRow> rows, std::optional<double> prefactor);

// Requires a degenerate operator and a nonempty ascending grid.
GrowthReport growth_report(const Operator& t, const std::vector<long>& n_grid, std::optional<double> prefactor,
                           Precision precision_bits, const EigenCache* cache = nullptr);

// ---------------------------------------------------------------------------
// Cauchy transforms

// C_{n,j}(z) = p^{(j+1)}(z) / ((n - j) p^{(j)}(z)) with n = deg p. Throws
// EvaluationAtRoot when p^{(j)}(z) is lost in rounding.
BigComplex empirical_cauchy(const Polynomial& p, int j, const BigComplex& z);
BigComplex empirical_cauchy(const NumericPolynomial& p, int j, const BigComplex& z);
BigComplex empirical_cauchy(const Eigenpair& e, int j, const BigComplex& z);

struct CauchyTerm {
  int j = 0;
  GaussianRational coeff;
  int zpow = 0;
};

/// z^{j0} C^{j0} + sum_{j in A} alpha_{j, deg Q_j} z^{deg Q_j} C^j = 1, with
/// Q_{j0} normalized to be monic.
struct CauchyEquation {
  int j0 = 0;
  std::vector<CauchyTerm> terms;  // j0 term first, then A ascending

  // Left-hand side at (z, C).
  BigComplex lhs(const BigComplex& z, const BigComplex& c) const;
  // Compact form such as "z^3C^3+z^2C^5=1".
  std::string to_string() const;
};

CauchyEquation cauchy_equation(const Operator& t);

struct ResidualReport {
  long n = 0;
  std::vector<BigComplex> sample_points;
  std::vector<double> residuals;  // |lhs - 1| at each kept sample
  std::vector<BigComplex> skipped;  // samples that landed on a root
  double median = 0.0;

  // n,sample_re,sample_im,residual
  std::string to_csv() const;
};

struct CircleOptions {
  int samples = 64;
  double radius_factor = 2.0;
  Precision precision_bits = 192;
};

// Samples equispaced points on the circle of radius radius_factor times the
// largest scaled-root modulus and evaluates the Cauchy equation with the
// empirical transform of q_n. `scaled` may supply the already solved cloud
// of q_n.
ResidualReport cauchy_residual(const Operator& t, const Eigenpair& e, const Rational& d, const CircleOptions& opts,
                               const RootCloud* scaled = nullptr);
ResidualReport cauchy_residual(const Operator& t, const Eigenpair& e, const Rational& d, int num_samples,
                               double radius_factor, Precision precision_bits);

// max over order pairs and circle samples of |C_{n,a}(z) - C_{n,b}(z)| for q_n.
double derivative_measure_distance(const Eigenpair& e, const Rational& d, const std::vector<int>& orders,
                                   const CircleOptions& opts, const RootCloud* scaled = nullptr);

// ---------------------------------------------------------------------------
// Inequalities used in the growth proofs

// |C_{n,j}(z0)| - 1/(2|z0|). Requires |z0| >= r_n.
double lemma2_margin(const Eigenpair& e, int j, const BigComplex& z0, double r_n);

// Right-hand side of the growth inequality with Q_k normalized monic; it is
// at least 1 when r_n is the true largest root modulus. Requires n > k.
double lemma3_rhs(const Operator& t, long n, double r_n);

struct GaussLucasResult {
  std::vector<bool> contained;  // entry j: roots of p^{(j+1)} within hull of roots of p^{(j)}
  bool all() const;
};

// Checks the chain p -> p' -> ... -> p^{(orders)} at tolerance tol_rel * r_n.
GaussLucasResult gauss_lucas_chain(const Polynomial& p, int orders, Precision precision_bits, double tol_rel);

// ---------------------------------------------------------------------------
// Cloud comparison and interlacing

double hausdorff_distance(const RootCloud& a, const RootCloud& b);

enum class Interlacing { Interlaced, NotInterlaced, Indeterminate };
const char* to_string(Interlacing v);

// Real-rooted clouds only, with |a| = |b| + 1. Points closer than 1e-12
// (relative) to one another make the answer Indeterminate.
Interlacing interlace_real(const RootCloud& a, const RootCloud& b, double imag_tol);

bool strictly_increasing(const std::vector<double>& xs);

}  // namespace eigenpoly
