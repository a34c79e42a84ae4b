#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace eptest;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("6/4") == Q("3/2"));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-8/2")) == "-4");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK_THROWS_AS(parse_rational("3/-4"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(parse_rational("2/"), Error);
}

TEST_CASE("gaussian rationals stay canonical") {
  const GaussianRational a(Q("2/4"), Q("-6/8"));
  CHECK(a.re() == Q("1/2"));
  CHECK(a.im() == Q("-3/4"));
  CHECK(a.re().get_den() > 0);

  const GaussianRational i(Q("0"), Q("1"));
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(Q("3"), Q("4"));
  CHECK(z * z.conj() == GaussianRational(25));
  CHECK(z / z == GaussianRational(1));
  CHECK(z.norm() == 25);
  CHECK(z.abs() == doctest::Approx(5.0));
  CHECK_THROWS(z / GaussianRational());

  CHECK(to_display(GaussianRational(Q("1"), Q("13"))) == "1+13i");
  CHECK(to_display(GaussianRational(Q("0"), Q("-1"))) == "-i");
  CHECK(to_display(GaussianRational(Q("-1/2"))) == "-1/2");
  const auto pair = GaussianRational(Q("-3"), Q("24")).to_pair();
  CHECK(pair[0] == "-3");
  CHECK(pair[1] == "24");
  CHECK(GaussianRational::from_pair("4/6", "0") == GaussianRational(Q("2/3")));
}

TEST_CASE("polynomials trim and compare exactly") {
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial().degree() == -1);
  CHECK(P({0, 0}).is_zero());
  CHECK(P({2, -4, 1}).is_monic());
  CHECK(Polynomial::from_roots({GaussianRational(1), GaussianRational(2)}) == P({2, -3, 1}));
  CHECK((P({1, 1}) * P({-1, 1})) == P({-1, 0, 1}));
  CHECK((P({1, 1}) - P({1, 1})).is_zero());
}

TEST_CASE("poly_eval") {
  const Polynomial p = P({2, -4, 1});
  CHECK(poly_eval(p, C(0)).re().to_double() == 2.0);
  CHECK(poly_eval(Polynomial(), C(3.5, -1)).is_zero());

  const Precision prec = 256;
  const BigFloat root = BigFloat(2.0, prec) + sqrt(BigFloat(2.0, prec));
  const BoundedValue v = poly_eval_bounded(p, BigComplex(root, BigFloat(prec)));
  const double bound = std::exp2(1.0 - static_cast<double>(prec)) * v.magnitude.to_double();
  CHECK(v.value.abs().to_double() <= bound);

  CHECK(poly_eval(p, GaussianRational(Q("1/2"))) == GaussianRational(Q("1/4")));
}

TEST_CASE("poly_derivative") {
  CHECK(poly_derivative(P({GaussianRational(Q("-1/2")), 0, 1}), 1) == P({0, 2}));
  CHECK(poly_derivative(P({GaussianRational(Q("-1/2")), 0, 1}), 3).is_zero());
  CHECK(poly_derivative(P({-6, 18, -9, 1}), 2) == P({-18, 6}));
  CHECK(poly_derivative(P({-6, 18, -9, 1}), 0) == P({-6, 18, -9, 1}));
}

TEST_CASE("poly_scale_arg") {
  const Polynomial p = P({2, -4, 1});
  CHECK(poly_scale_arg(p, GaussianRational(2)) == P({2, -8, 4}));
  CHECK(poly_scale_arg(p, GaussianRational(1)) == p);
  CHECK(poly_scale_arg(P({0, 0, 0, 1}), GaussianRational(Q("1/2"))) ==
        P({0, 0, 0, GaussianRational(Q("1/8"))}));
  CHECK_THROWS_AS(poly_scale_arg(p, GaussianRational()), Error);
  CHECK_THROWS_AS(poly_scale_arg(p, C(0)), Error);

  const NumericPolynomial q = poly_scale_arg(p, C(2, 0, 128));
  CHECK(q.precision() == 128);
  CHECK(q.coeffs()[1].re().to_double() == -8.0);
  CHECK(q.coeffs()[2].re().to_double() == 4.0);
}

TEST_CASE("falling_factorial") {
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(2, 3) == 0);
  CHECK(falling_factorial(7, 0) == 1);
}

TEST_CASE("bigcomplex precision floor and propagation") {
  CHECK_THROWS_AS(BigComplex(Precision{32}), Error);
  const BigComplex a = C(1, 1, 64);
  const BigComplex b = C(1, 1, 256);
  CHECK((a * b).precision() == 256);
  CHECK((a + b).precision() == 256);
}

// ---------------------------------------------------------------------------
// Properties over generated inputs

TEST_CASE("property: scaling is multiplicative over products") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = rng.poly(static_cast<int>(rng.range(0, 6)), rng.coin());
    const Polynomial q = rng.poly(static_cast<int>(rng.range(0, 6)), rng.coin());
    GaussianRational s = rng.gaussian(rng.coin());
    if (s.is_zero()) s = GaussianRational(3);
    CHECK(poly_scale_arg(p * q, s) == poly_scale_arg(p, s) * poly_scale_arg(q, s));
  }
}

TEST_CASE("property: derivatives compose") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = rng.poly(static_cast<int>(rng.range(0, 12)), rng.coin());
    const int a = static_cast<int>(rng.range(0, 6));
    const int b = static_cast<int>(rng.range(0, 6));
    CHECK(poly_derivative(poly_derivative(p, a), b) == poly_derivative(p, a + b));
  }
}

TEST_CASE("property: falling factorial equals m!/(m-j)!") {
  auto fact = [](long m) {
    Integer f = 1;
    for (long i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (long m = 0; m <= 12; ++m) {
    for (long j = 0; j <= m; ++j) CHECK(falling_factorial(m, j) == fact(m) / fact(m - j));
  }
}

TEST_CASE("property: doubled-precision evaluation agrees within roundoff times condition") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial p = rng.poly(static_cast<int>(rng.range(1, 30)), rng.coin());
    const double x = static_cast<double>(rng.range(-300, 300)) / 97.0;
    const double y = static_cast<double>(rng.range(-300, 300)) / 89.0;
    const Precision lo = 96;
    const BoundedValue a = poly_eval_bounded(p, C(x, y, lo));
    const BigComplex b = poly_eval(p, C(x, y, 2 * lo));
    const double diff = (a.value - b).abs().to_double();
    const double slack = 4.0 * (p.degree() + 1);
    CHECK(diff <= slack * std::exp2(-static_cast<double>(lo)) * a.magnitude.to_double());
  }
}
