#include "eigenpoly/gaussian_rational.hpp"

#include <cctype>
#include <cmath>

#include "eigenpoly/error.hpp"

namespace eigenpoly {

namespace {

bool is_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "not an exact rational: \"" + std::string(text) + "\"");
  }
  auto strip_plus = [](std::string_view s) { return std::string(s.front() == '+' ? s.substr(1) : s); };
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double GaussianRational::abs() const { return std::hypot(re_.get_d(), im_.get_d()); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string to_display(const GaussianRational& z) {
  const int sr = sgn(z.re());
  const int si = sgn(z.im());
  if (si == 0) return to_string(z.re());
  std::string imag;
  Rational mag = abs(z.im());
  if (mag != 1) imag = to_string(mag);
  imag += "i";
  if (sr == 0) return (si < 0 ? "-" : "") + imag;
  return to_string(z.re()) + (si < 0 ? "-" : "+") + imag;
}

}  // namespace eigenpoly
