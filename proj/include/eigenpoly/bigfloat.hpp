#pragma once

#include <algorithm>
#include <complex>
#include <string>

#include <mpfr.h>

#include "eigenpoly/gaussian_rational.hpp"

namespace eigenpoly {

using Precision = mpfr_prec_t;

inline constexpr Precision kMinComplexPrecision = 64;

/// Owning wrapper around an MPFR float. Binary operations produce a value
/// at the larger precision of the two operands, rounded to nearest.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = kMinComplexPrecision);
  BigFloat(double value, Precision prec);
  BigFloat(const Rational& value, Precision prec);
  BigFloat(const Integer& value, Precision prec);
  // Decimal or "@nan@"-style strings accepted by mpfr_set_str.
  BigFloat(const std::string& decimal, Precision prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  Precision precision() const noexcept { return mpfr_get_prec(v_); }
  // Rounds in place to a new precision.
  void set_precision(Precision prec);

  mpfr_ptr raw() noexcept { return v_; }
  mpfr_srcptr raw() const noexcept { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // log2|x| without overflow; -inf for zero.
  double log2_abs() const;

  // Scientific notation carrying every significant digit of the precision.
  std::string to_string() const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat pow(const BigFloat& base, const BigFloat& exponent);
BigFloat pi(Precision prec);
// 2^e at the given precision.
BigFloat exp2i(long e, Precision prec);
// base^(num/den) computed at prec from an exact rational exponent.
BigFloat pow_rational(long base, const Rational& exponent, Precision prec);

/// Complex number with BigFloat parts. Precision is at least 64 bits.
class BigComplex {
 public:
  explicit BigComplex(Precision prec = kMinComplexPrecision);
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(std::complex<double> z, Precision prec);
  BigComplex(const GaussianRational& z, Precision prec);

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  BigFloat& re() noexcept { return re_; }
  BigFloat& im() noexcept { return im_; }

  Precision precision() const noexcept { return std::max(re_.precision(), im_.precision()); }
  void set_precision(Precision prec);

  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  BigFloat abs() const;
  BigFloat norm() const;  // |z|^2
  BigComplex conj() const { return {re_, -im_}; }

  BigComplex operator-() const { return {-re_, -im_}; }
  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& s);
  BigComplex& operator/=(const BigFloat& s);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
  friend BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }

 private:
  BigFloat re_;
  BigFloat im_;
};

// z^e for a nonnegative integer exponent.
BigComplex pow(const BigComplex& z, unsigned long e);
// r * exp(i*theta)
BigComplex polar(const BigFloat& r, const BigFloat& theta);

}  // namespace eigenpoly
