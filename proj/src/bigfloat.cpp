#include "eigenpoly/bigfloat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eigenpoly/error.hpp"

namespace eigenpoly {

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const Integer& value, Precision prec) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal, Precision prec) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw Error(ErrorKind::Parse, "not a decimal number: \"" + decimal + "\"");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::set_precision(Precision prec) { mpfr_prec_round(v_, prec, MPFR_RNDN); }

double BigFloat::log2_abs() const {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  if (!mpfr_number_p(v_)) return std::numeric_limits<double>::infinity();
  long e = 0;
  double m = mpfr_get_d_2exp(&e, v_, MPFR_RNDN);
  return std::log2(std::fabs(m)) + static_cast<double>(e);
}

std::string BigFloat::to_string() const {
  if (mpfr_zero_p(v_)) return "0";
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
  // Enough decimal digits to round-trip the binary significand.
  const auto digits = static_cast<int>(mpfr_get_str_ndigits(10, precision()));
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

namespace {

template <typename Op>
BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
  BigFloat r(std::max(a.precision(), b.precision()));
  op(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

void widen(BigFloat& a, const BigFloat& b) {
  if (b.precision() > a.precision()) a.set_precision(b.precision());
}

}  // namespace

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen(*this, o);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen(*this, o);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen(*this, o);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen(*this, o);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  return binary(base, exponent, mpfr_pow);
}

BigFloat pi(Precision prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

BigFloat exp2i(long e, Precision prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
  return r;
}

BigFloat pow_rational(long base, const Rational& exponent, Precision prec) {
  if (base <= 0) throw std::domain_error("pow_rational: base must be positive");
  // Guard bits absorb the error of the intermediate exponent division.
  const Precision work = prec + 32;
  BigFloat e(exponent, work);
  BigFloat b(static_cast<double>(base), work);
  BigFloat r = pow(b, e);
  r.set_precision(prec);
  return r;
}

BigComplex::BigComplex(Precision prec) : re_(prec), im_(prec) {
  if (prec < kMinComplexPrecision) {
    throw Error(ErrorKind::Precondition, "BigComplex precision must be at least 64 bits");
  }
}

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  if (precision() < kMinComplexPrecision) {
    throw Error(ErrorKind::Precondition, "BigComplex precision must be at least 64 bits");
  }
  const Precision p = precision();
  if (re_.precision() != p) re_.set_precision(p);
  if (im_.precision() != p) im_.set_precision(p);
}

BigComplex::BigComplex(std::complex<double> z, Precision prec)
    : BigComplex(BigFloat(z.real(), prec), BigFloat(z.imag(), prec)) {}

BigComplex::BigComplex(const GaussianRational& z, Precision prec)
    : BigComplex(BigFloat(z.re(), prec), BigFloat(z.im(), prec)) {}

void BigComplex::set_precision(Precision prec) {
  re_.set_precision(prec);
  im_.set_precision(prec);
}

BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  BigFloat re = re_ * o.re_ - im_ * o.im_;
  BigFloat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  BigFloat n = o.norm();
  BigFloat re = (re_ * o.re_ + im_ * o.im_) / n;
  BigFloat im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& s) {
  re_ *= s;
  im_ *= s;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigFloat& s) {
  re_ /= s;
  im_ /= s;
  return *this;
}

BigComplex pow(const BigComplex& z, unsigned long e) {
  BigComplex result(BigFloat(1.0, z.precision()), BigFloat(0.0, z.precision()));
  BigComplex base = z;
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

BigComplex polar(const BigFloat& r, const BigFloat& theta) {
  const Precision p = std::max(r.precision(), theta.precision());
  BigFloat s(p);
  BigFloat c(p);
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {r * c, r * s};
}

}  // namespace eigenpoly
