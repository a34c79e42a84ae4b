#pragma once

#include <array>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eigenpoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "a/b" or "a" (optional sign). Rejects anything else, including
// zero denominators. The result is canonical.
Rational parse_rational(std::string_view text);

// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& q);

/// Exact complex number with rational parts.
///
/// Every arithmetic result is canonical (lowest terms, positive
/// denominators), so `==` is exact structural equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return Rational(re_ * re_ + im_ * im_); }
  // |z| as a double; exact parts are rounded once.
  double abs() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Serialized as a [re, im] pair of rational strings.
  std::array<std::string, 2> to_pair() const { return {to_string(re_), to_string(im_)}; }
  static GaussianRational from_pair(std::string_view re, std::string_view im) {
    return {parse_rational(re), parse_rational(im)};
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

// Human-readable form: "2", "-1/2", "3i", "1+13i", "-13+22i".
std::string to_display(const GaussianRational& z);

}  // namespace eigenpoly
