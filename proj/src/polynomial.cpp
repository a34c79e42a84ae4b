#include "eigenpoly/polynomial.hpp"

#include <algorithm>

#include "eigenpoly/error.hpp"

namespace eigenpoly {

Polynomial::Polynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(GaussianRational coeff, int power) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(power) + 1);
  c.back() = std::move(coeff);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<GaussianRational>& roots) {
  Polynomial p({GaussianRational(1)});
  for (const auto& r : roots) p = p * Polynomial({-r, GaussianRational(1)});
  return p;
}

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == GaussianRational(1); }

GaussianRational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

std::size_t Polynomial::max_coeff_bits() const {
  std::size_t bits = 0;
  for (const auto& c : coeffs_) {
    for (const Rational* q : {&c.re(), &c.im()}) {
      bits = std::max({bits, bit_length(q->get_num()), bit_length(q->get_den())});
    }
  }
  return bits;
}

std::string Polynomial::canonical_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ';';
    auto [re, im] = coeffs_[i].to_pair();
    out += '[' + re + ',' + im + ']';
  }
  return out;
}

NumericPolynomial::NumericPolynomial(std::vector<BigComplex> coeffs, Precision prec)
    : coeffs_(std::move(coeffs)), prec_(prec) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NumericPolynomial::NumericPolynomial(const Polynomial& p, Precision prec) : prec_(prec) {
  coeffs_.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) coeffs_.emplace_back(c, prec);
}

BigComplex NumericPolynomial::eval(const BigComplex& z) const {
  return poly_eval_bounded(*this, z).value;
}

NumericPolynomial NumericPolynomial::derivative(int order) const {
  std::vector<BigComplex> out;
  for (int i = order; i <= degree(); ++i) {
    BigFloat f(Integer(falling_factorial(i, order)), prec_);
    out.push_back(coeffs_[static_cast<std::size_t>(i)] * f);
  }
  return {std::move(out), prec_};
}

Integer falling_factorial(long m, long j) {
  if (j < 0) throw std::invalid_argument("falling_factorial: negative order");
  if (m < j) return 0;
  Integer r = 1;
  for (long t = 0; t < j; ++t) r *= (m - t);
  return r;
}

namespace {

// Horner at precision prec on coefficients already rounded to it.
BoundedValue horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
  const Precision prec = z.precision();
  BigComplex acc(prec);
  BigFloat mag(prec);
  if (coeffs.empty()) return {acc, mag};
  const BigFloat az = z.abs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= z;
    acc += *it;
    mag *= az;
    mag += it->abs();
  }
  acc.set_precision(prec);
  mag.set_precision(prec);
  return {std::move(acc), std::move(mag)};
}

}  // namespace

BoundedValue poly_eval_bounded(const Polynomial& p, const BigComplex& z) {
  return horner(NumericPolynomial(p, z.precision()).coeffs(), z);
}

BoundedValue poly_eval_bounded(const NumericPolynomial& p, const BigComplex& z) {
  if (z.precision() == p.precision()) return horner(p.coeffs(), z);
  std::vector<BigComplex> c = p.coeffs();
  for (auto& x : c) x.set_precision(z.precision());
  return horner(c, z);
}

BigComplex poly_eval(const Polynomial& p, const BigComplex& z) { return poly_eval_bounded(p, z).value; }

GaussianRational poly_eval(const Polynomial& p, const GaussianRational& z) {
  GaussianRational acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

Polynomial poly_derivative(const Polynomial& p, int j) {
  if (j < 0) throw std::invalid_argument("poly_derivative: negative order");
  if (j == 0) return p;
  std::vector<GaussianRational> out;
  for (int i = j; i <= p.degree(); ++i) {
    out.push_back(p.coeffs()[static_cast<std::size_t>(i)] * GaussianRational(Rational(falling_factorial(i, j))));
  }
  return Polynomial(std::move(out));
}

Polynomial poly_scale_arg(const Polynomial& p, const GaussianRational& s) {
  if (s.is_zero()) throw Error(ErrorKind::InvalidScale, "scale factor must be nonzero");
  std::vector<GaussianRational> out;
  out.reserve(p.coeffs().size());
  GaussianRational power(1);
  for (const auto& c : p.coeffs()) {
    out.push_back(c * power);
    power *= s;
  }
  return Polynomial(std::move(out));
}

NumericPolynomial poly_scale_arg(const Polynomial& p, const BigComplex& s) {
  if (s.is_zero()) throw Error(ErrorKind::InvalidScale, "scale factor must be nonzero");
  const Precision prec = s.precision();
  std::vector<BigComplex> out;
  out.reserve(p.coeffs().size());
  BigComplex power(BigFloat(1.0, prec), BigFloat(0.0, prec));
  for (const auto& c : p.coeffs()) {
    out.push_back(BigComplex(c, prec) * power);
    power *= s;
  }
  return {std::move(out), prec};
}

}  // namespace eigenpoly
