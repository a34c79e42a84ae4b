#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "eigenpoly/analysis.hpp"

namespace eptest {

using namespace eigenpoly;

inline Rational Q(const char* s) { return parse_rational(s); }

// Real integer coefficients, ascending.
inline Polynomial P(std::initializer_list<long> cs) {
  std::vector<GaussianRational> v;
  for (long c : cs) v.emplace_back(c);
  return Polynomial(std::move(v));
}

inline Polynomial P(std::initializer_list<GaussianRational> cs) { return Polynomial(std::vector<GaussianRational>(cs)); }

inline std::filesystem::path testdata(const std::string& file) {
  return std::filesystem::path(EIGENPOLY_TESTDATA) / "operators" / file;
}

inline Operator load_op(const std::string& name) { return Operator::load(testdata(name + ".json")); }

inline BigComplex C(double re, double im = 0.0, Precision prec = 192) { return BigComplex(std::complex<double>(re, im), prec); }

// splitmix64; small, seedable, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return next() & 1U; }

  Rational rational(long max_num = 9, long max_den = 5) {
    Rational q(range(-max_num, max_num), range(1, max_den));
    q.canonicalize();
    return q;
  }
  GaussianRational gaussian(bool complex) { return complex ? GaussianRational(rational(), rational()) : rational(); }
  Polynomial poly(int degree, bool complex = false) {
    std::vector<GaussianRational> cs;
    for (int i = 0; i <= degree; ++i) cs.push_back(gaussian(complex));
    while (cs.back().is_zero()) cs.back() = GaussianRational(range(1, 5));
    return Polynomial(std::move(cs));
  }

 private:
  std::uint64_t s_;
};

}  // namespace eptest
