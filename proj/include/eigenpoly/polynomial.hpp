#pragma once

#include <string>
#include <vector>

#include "eigenpoly/bigfloat.hpp"
#include "eigenpoly/gaussian_rational.hpp"

namespace eigenpoly {

/// Exact polynomial with Gaussian-rational coefficients in ascending powers.
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<GaussianRational> coeffs);

  static Polynomial monomial(GaussianRational coeff, int power);
  // Monic polynomial with the given (exact) roots.
  static Polynomial from_roots(const std::vector<GaussianRational>& roots);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;

  const std::vector<GaussianRational>& coeffs() const noexcept { return coeffs_; }
  // Coefficient of z^i; zero outside the stored range.
  GaussianRational coeff(int i) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Bit length of the largest numerator or denominator among coefficients.
  std::size_t max_coeff_bits() const;

  // Canonical text used for hashing: "[re,im];[re,im];..." ascending.
  std::string canonical_string() const;

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

/// Polynomial with BigComplex coefficients at a fixed working precision.
class NumericPolynomial {
 public:
  NumericPolynomial(std::vector<BigComplex> coeffs, Precision prec);
  // Rounds each exact coefficient once to prec.
  NumericPolynomial(const Polynomial& p, Precision prec);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Precision precision() const noexcept { return prec_; }
  const std::vector<BigComplex>& coeffs() const noexcept { return coeffs_; }

  BigComplex eval(const BigComplex& z) const;
  NumericPolynomial derivative(int order = 1) const;

 private:
  std::vector<BigComplex> coeffs_;
  Precision prec_;
};

struct BoundedValue {
  BigComplex value;
  // sum |a_i| |z|^i, the magnitude scale against which rounding is measured.
  BigFloat magnitude;
};

std::size_t bit_length(const Integer& x);

// m (m-1) ... (m-j+1); zero when m < j, one when j == 0.
Integer falling_factorial(long m, long j);

// Horner evaluation at the precision of z; coefficients rounded once.
BigComplex poly_eval(const Polynomial& p, const BigComplex& z);
BoundedValue poly_eval_bounded(const Polynomial& p, const BigComplex& z);
BoundedValue poly_eval_bounded(const NumericPolynomial& p, const BigComplex& z);
GaussianRational poly_eval(const Polynomial& p, const GaussianRational& z);

Polynomial poly_derivative(const Polynomial& p, int j);

// q(z) = p(s z). Throws InvalidScale when s == 0.
Polynomial poly_scale_arg(const Polynomial& p, const GaussianRational& s);
// Numeric path: s is used at its own precision, which the result records.
NumericPolynomial poly_scale_arg(const Polynomial& p, const BigComplex& s);

}  // namespace eigenpoly
